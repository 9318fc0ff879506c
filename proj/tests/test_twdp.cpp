// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include <doctest.h>

#include "fixtures.hpp"
#include "sdg/errors.hpp"
#include "sdg/generators.hpp"
#include "sdg/oracle.hpp"
#include "sdg/twdp.hpp"

using namespace sdg;
using namespace fixtures;

namespace {

NiceTreeDecomposition nice(const SocialNetwork& g) { return make_nice(compute_decomposition(g).decomposition); }

}  // namespace

TEST_CASE("twdp on the figures") {
  const auto g1 = figure(1);
  const auto r1 = solve_tw_welfare(closed("1,0,-1"), g1, nice(g1));
  CHECK(r1.welfare == ExtendedValue(18));
  CHECK(r1.algorithm == "twdp");
  CHECK(social_welfare(closed("1,0,-1"), g1, r1.outcome) == ExtendedValue(18));
  CHECK(solve_tw_welfare(closed("1,-3"), g1, nice(g1)).welfare == ExtendedValue(14));

  const auto s = closed("1,1,-1,-1,-1,-1");
  const auto g2 = figure(2);
  const auto w2 = solve_tw_welfare(s, g2, nice(g2));
  CHECK(w2.welfare == ExtendedValue(62));
  CHECK(w2.outcome == Outcome::grand(10));
  const auto ir2 = solve_tw_ir(s, g2, nice(g2));
  CHECK(ir2.welfare == ExtendedValue(60));
  CHECK(ir2.outcome.coalition_of(PX) == std::vector<Agent>{PX});

  const auto g3 = figure(3);
  const auto ns3 = solve_tw_ns(s, g3, nice(g3));
  REQUIRE(ns3);
  CHECK(ns3->welfare == ExtendedValue(46));
  CHECK(ns3->outcome == outcome_file("fig3_ns.out", 10));
  CHECK(solve_tw_ir(s, g3, nice(g3)).welfare == ExtendedValue(48));
}

TEST_CASE("twdp small cases") {
  const auto edge = path(2);
  const auto r = solve_tw_welfare(closed("1"), edge, nice(edge));
  CHECK(r.welfare == ExtendedValue(2));
  CHECK(r.outcome == Outcome::grand(2));

  const auto tri = clique(3);
  const auto ns = solve_tw_ns(closed("1"), tri, nice(tri));
  REQUIRE(ns);
  CHECK(ns->welfare == ExtendedValue(6));
  CHECK(ns->outcome == Outcome::grand(3));

  const auto lone = SocialNetwork(1);
  CHECK(solve_tw_welfare(closed("3"), lone, nice(lone)).welfare == ExtendedValue(0));

  // Non-negative closed vector whose welfare optimum is IR: same answer.
  const auto g1 = figure(1);
  CHECK(solve_tw_ir(closed("2,1"), g1, nice(g1)) .welfare == solve_tw_welfare(closed("2,1"), g1, nice(g1)).welfare);
}

TEST_CASE("twdp rejects what it cannot handle") {
  const auto g = path(3);
  CHECK_THROWS_AS(solve_tw(open("1"), g, nice(g), Mode::welfare), Unsupported);
  CHECK_THROWS_AS(solve_tw(closed("1"), g, nice(path(4)), Mode::welfare), InvalidArgument);
  TwdpOptions tight;
  tight.max_records_per_node = 3;
  const auto k = clique(6);
  CHECK_THROWS_AS(solve_tw(closed("1,1"), k, nice(k), Mode::welfare, tight), ResourceLimit);
}

TEST_CASE("twdp matches the oracle on random bounded-width networks") {
  std::mt19937_64 rng(101);
  TwdpStats stats;
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const auto g = random_partial_ktree(n, 1 + static_cast<int>(rng() % 3), 0.6, rng);
    const auto d = nice(g);
    for (const auto& s : sweep_vectors())
      for (Mode mode : {Mode::welfare, Mode::ir, Mode::ns}) {
        const auto want = brute_force_solve(s, g, mode);
        const auto got = solve_tw(s, g, d, mode, {}, &stats);
        REQUIRE(got.has_value() == want.has_value());
        if (!got) continue;
        CHECK(got->welfare == want->welfare);
        CHECK(satisfies(s, g, got->outcome, mode));
        CHECK(social_welfare(s, g, got->outcome) == got->welfare);
      }
  }
  CHECK(stats.max_records > 0);
}

TEST_CASE("twdp works on disconnected networks") {
  const SocialNetwork g(6, {{0, 1}, {1, 2}, {3, 4}});
  const auto r = solve_tw_welfare(closed("1,0"), g, nice(g));
  CHECK(r.welfare == brute_force_solve(closed("1,0"), g, Mode::welfare)->welfare);
}
