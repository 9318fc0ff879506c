// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include <doctest.h>

#include "fixtures.hpp"
#include "sdg/errors.hpp"
#include "sdg/fptdp.hpp"
#include "sdg/generators.hpp"
#include "sdg/oracle.hpp"

using namespace sdg;
using namespace fixtures;

namespace {

NiceTreeDecomposition nice(const SocialNetwork& g) { return make_nice(compute_decomposition(g).decomposition); }

// 2 x k grid, max degree 3.
SocialNetwork ladder(int k) {
  SocialNetwork g(2 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, k + i);
    if (i + 1 < k) {
      g.add_edge(i, i + 1);
      g.add_edge(k + i, k + i + 1);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("coalition size selection") {
  const auto g1 = figure(1);  // max degree 4, treewidth 3
  CHECK(select_sz(closed("1,-3"), g1) == 7);
  CHECK(select_sz(closed("1,-3"), path(9)) == 5);
  CHECK(select_sz(closed("1,-3"), star(3)) == 4);
  CHECK(select_sz(closed("1,0,-1"), SocialNetwork(3, {{0, 1}, {1, 2}})) == 3);
  CHECK(select_sz(closed("1,0,-1"), ladder(15)) == 19);
  CHECK(select_sz(closed("1,0,0"), figure(2)) == 10);
  CHECK_FALSE(select_sz(open("1,0,0"), figure(2)));
  CHECK(select_sz(open("1,-3"), path(9)) == 5);
}

TEST_CASE("fptdp on the figures") {
  const auto g1 = figure(1);
  const auto sz = select_sz(closed("1,-3"), g1);
  REQUIRE(sz);
  const auto r = solve_fpt(closed("1,-3"), g1, nice(g1), *sz, Mode::welfare);
  REQUIRE(r);
  CHECK(r->welfare == ExtendedValue(14));
  CHECK(r->optimal);
  CHECK(r->algorithm == "fptdp");

  const auto s = closed("1,1,-1,-1,-1,-1");
  const auto g3 = figure(3);
  CHECK(solve_fpt(s, g3, nice(g3), 10, Mode::ns)->welfare == ExtendedValue(46));
  CHECK(solve_fpt(s, g3, nice(g3), 10, Mode::ir)->welfare == ExtendedValue(48));
  const auto g2 = figure(2);
  CHECK(solve_fpt(s, g2, nice(g2), 10, Mode::welfare)->welfare == ExtendedValue(62));
  CHECK(solve_fpt(s, g2, nice(g2), 10, Mode::ir)->welfare == ExtendedValue(60));
}

TEST_CASE("fptdp size caps") {
  const auto g1 = figure(1);
  const auto one = solve_fpt(closed("1,0,-1"), g1, nice(g1), 1, Mode::welfare);
  REQUIRE(one);
  CHECK(one->outcome == Outcome::singletons(7));
  CHECK(one->welfare == ExtendedValue(0));
  CHECK_FALSE(one->optimal);

  const auto two = solve_fpt(closed("1"), clique(4), nice(clique(4)), 2, Mode::welfare);
  CHECK(two->welfare == ExtendedValue(4));
  for (const auto& c : two->outcome.coalitions()) CHECK(c.size() <= 2);

  // A triangle has no Nash stable outcome with coalitions of at most two agents.
  CHECK_FALSE(solve_fpt(closed("1"), clique(3), nice(clique(3)), 2, Mode::ns));
  CHECK(solve_fpt(closed("1"), clique(3), nice(clique(3)), 3, Mode::ns)->welfare == ExtendedValue(6));

  FptOptions tight;
  tight.max_records_per_node = 2;
  CHECK_THROWS_AS(solve_fpt(closed("1,1"), clique(5), nice(clique(5)), 5, Mode::welfare, tight), ResourceLimit);
}

TEST_CASE("fptdp matches the oracle with sz = n") {
  std::mt19937_64 rng(202);
  const std::vector<ScoringVector> vectors{closed("1"), closed("1,-3"), closed("1,0,-1"), open("1,-1"),
                                           open("2,0,-1"), open("1,1,-1,-1,-1,-1")};
  FptStats stats;
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto g = random_partial_ktree(n, 1 + static_cast<int>(rng() % 3), 0.6, rng);
    const auto d = nice(g);
    for (const auto& s : vectors)
      for (Mode mode : {Mode::welfare, Mode::ir, Mode::ns}) {
        const auto want = brute_force_solve(s, g, mode);
        const auto got = solve_fpt(s, g, d, n, mode, {}, &stats);
        REQUIRE(got.has_value() == want.has_value());
        if (!got) continue;
        CHECK(got->welfare == want->welfare);
        CHECK(got->optimal);
        CHECK(satisfies(s, g, got->outcome, mode));
      }
  }
  CHECK(stats.total_records > 0);
}

TEST_CASE("fptdp with the selected cap matches the oracle") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 25; ++t) {
    const auto g = random_bounded_degree(8, 3, 0.5, true, rng);
    for (const auto& s : {closed("1,-3"), closed("2,-1"), closed("1")}) {
      const auto sz = select_sz(s, g);
      REQUIRE(sz);
      for (Mode mode : {Mode::welfare, Mode::ir, Mode::ns}) {
        const auto got = solve_fpt(s, g, nice(g), *sz, mode);
        const auto want = brute_force_solve(s, g, mode);
        REQUIRE(got.has_value() == want.has_value());
        if (got) CHECK(got->welfare == want->welfare);
      }
    }
  }
}
