// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include <doctest.h>

#include "fixtures.hpp"
#include "sdg/errors.hpp"

using namespace sdg;
using namespace fixtures;

namespace {
const ScoringVector kSixTail = closed("1,1,-1,-1,-1,-1");
}

TEST_CASE("modes parse") {
  CHECK(parse_mode("ns") == Mode::ns);
  CHECK(to_string(Mode::ir) == "ir");
  CHECK_THROWS_AS(parse_mode("core"), InvalidArgument);
}

TEST_CASE("grand coalition of the second figure is not individually rational") {
  const auto g = figure(2);
  const auto grand = Outcome::grand(10);
  CHECK_FALSE(is_individually_rational(kSixTail, g, grand));
  const auto dev = find_deviation(kSixTail, g, grand, Mode::ir);
  REQUIRE(dev);
  CHECK(dev->agent == PX);
  CHECK(dev->kind == Deviation::Kind::to_singleton);
  CHECK(dev->gain() == 1);
  CHECK(dev->to_string() == "agent 3 -> singleton (-1 -> 0)");
}

TEST_CASE("third figure outcomes") {
  const auto g = figure(3);
  const auto ir = outcome_file("fig3_ir.out", 10);
  const auto ns = outcome_file("fig3_ns.out", 10);
  CHECK(is_individually_rational(kSixTail, g, ir));
  CHECK_FALSE(is_nash_stable(kSixTail, g, ir));
  const auto dev = find_deviation(kSixTail, g, ir, Mode::ns);
  REQUIRE(dev);
  CHECK(dev->agent == PX);
  CHECK(dev->kind == Deviation::Kind::to_coalition);
  REQUIRE(dev->target);
  CHECK(ir.coalitions()[*dev->target] == std::vector<Agent>{kFig3Y});

  CHECK(is_nash_stable(kSixTail, g, ns));
  CHECK_FALSE(find_deviation(kSixTail, g, ns, Mode::ns));
  CHECK(satisfies(kSixTail, g, ns, Mode::ns));
}

TEST_CASE("small cases") {
  const auto edge = path(2);
  CHECK(is_individually_rational(closed("1"), edge, Outcome::singletons(2)));
  CHECK_FALSE(is_nash_stable(closed("1"), edge, Outcome::singletons(2)));
  CHECK(is_nash_stable(closed("1"), edge, Outcome::grand(2)));
  CHECK_FALSE(find_deviation(closed("1"), edge, Outcome::grand(2), Mode::ir));
  CHECK(satisfies(closed("-1"), edge, Outcome::grand(2), Mode::welfare));
  // A disconnected coalition leaves its members at -inf; leaving is an unbounded gain.
  const Outcome split({{0, 1}}, 2);
  const auto dev = find_deviation(closed("1"), SocialNetwork(2), split, Mode::ir);
  REQUIRE(dev);
  CHECK_FALSE(dev->gain());
}

TEST_CASE("stability predicates agree with the reference and NS implies IR") {
  std::mt19937_64 rng(5);
  const std::vector<ScoringVector> vectors{closed("1"), closed("1,-3"), closed("2,0,-1"), open("1,-1"),
                                           open("2,1,-2")};
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto g = random_graph(n, 0.5, rng);
    std::vector<int> label(n);
    for (auto& l : label) l = static_cast<int>(rng() % 3);
    const auto pi = Outcome::from_labels(label);
    for (const auto& s : vectors) {
      const bool ns = is_nash_stable(s, g, pi);
      const bool ir = is_individually_rational(s, g, pi);
      CHECK(ns == ref_stable(s, g, pi.labels(), Mode::ns));
      CHECK(ir == ref_stable(s, g, pi.labels(), Mode::ir));
      if (ns) CHECK(ir);
      CHECK(find_deviation(s, g, pi, Mode::ns).has_value() == !ns);
    }
  }
}
