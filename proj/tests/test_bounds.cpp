// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include <doctest.h>

#include "fixtures.hpp"
#include "sdg/bounds.hpp"
#include "sdg/errors.hpp"

using namespace sdg;
using namespace fixtures;

namespace {

// max utility over members of the grand coalition
ExtendedValue best_member(const ScoringVector& s, const SocialNetwork& g) {
  ExtendedValue best = ExtendedValue::neg_inf();
  for (Agent a = 0; a < g.size(); ++a) best = std::max(best, agent_utility(s, g, Outcome::grand(g.size()), a));
  return best;
}

SocialNetwork tree13() {
  return SocialNetwork(13, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}, {4, 10}, {6, 11},
                            {8, 12}});
}

SocialNetwork spider() {
  return SocialNetwork(9, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {0, 7}, {7, 8}});
}

}  // namespace

TEST_CASE("degree bound values") {
  CHECK(degree_coalition_bound(closed("1,0,-1"), 3) == 19);
  CHECK(degree_coalition_bound(closed("1"), 5) == 6);
  CHECK(degree_coalition_bound(closed("2,1"), 2) == 5);
  CHECK(degree_coalition_bound(closed("1,-1"), 4) == 9);
  CHECK(degree_coalition_bound(closed("1,1"), 2) == 5);
  CHECK(degree_coalition_bound(closed("5,-1"), 1) == 2);
  CHECK(degree_coalition_bound(closed("1"), 0) == 1);
  CHECK(degree_coalition_bound(closed("1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"), 50) ==
        std::numeric_limits<int>::max());
  CHECK_THROWS_AS(degree_coalition_bound(open("1,0,-1"), 3), Unsupported);
}

TEST_CASE("networks where a smaller degree bound would fail") {
  // Each coalition is connected with max degree as stated, and its best
  // member still has non-negative utility, so the bound must exceed its size.
  const auto t = tree13();
  CHECK(t.max_degree() == 3);
  CHECK(best_member(closed("1,0,-1"), t) >= ExtendedValue(0));
  CHECK(degree_coalition_bound(closed("1,0,-1"), 3) >= 13);

  const auto sp = spider();
  CHECK(sp.max_degree() == 4);
  CHECK(best_member(closed("1,-1"), sp) >= ExtendedValue(0));
  CHECK(degree_coalition_bound(closed("1,-1"), 4) >= 9);

  const auto c5 = cycle(5);
  CHECK(best_member(closed("1,1"), c5) >= ExtendedValue(0));
  CHECK(degree_coalition_bound(closed("1,1"), 2) >= 5);

  const auto k6 = clique(6);
  CHECK(best_member(closed("1"), k6) >= ExtendedValue(0));
  CHECK(degree_coalition_bound(closed("1"), 5) >= 6);
}

TEST_CASE("degree bound holds on every connected coalition of small random networks") {
  std::mt19937_64 rng(8);
  const std::vector<ScoringVector> vectors{closed("1"), closed("1,0,-1"), closed("1,-1"), closed("2,1"),
                                           closed("1,1")};
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 6 + static_cast<int>(rng() % 5);
    auto g = random_graph(n, 0.35, rng);
    for (const auto& s : vectors) {
      const int bound = degree_coalition_bound(s, g.max_degree());
      if (bound >= n) continue;
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) <= bound) continue;
        std::vector<Agent> c;
        for (Agent a = 0; a < n; ++a)
          if (mask >> a & 1) c.push_back(a);
        if (coalition_diameter(g, c).is_neg_inf()) continue;
        ++checked;
        for (Agent a : c) CHECK(utility_in(s, g, c, a) < ExtendedValue(0));
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("treewidth bound") {
  CHECK(treewidth_coalition_bound(closed("1,-3"), 1) == 5);
  CHECK(treewidth_coalition_bound(closed("3,-1"), 2) == 17);
  CHECK(treewidth_coalition_bound(closed("1,-3"), 3) == 13);
  CHECK(treewidth_coalition_bound(closed("1"), 2) == 9);  // s(2) = -inf
  CHECK(treewidth_coalition_bound(closed("-2"), 4) == 1);
  CHECK_THROWS_AS(treewidth_coalition_bound(closed("1,0,-1"), 2), PreconditionViolated);
  CHECK_THROWS_AS(treewidth_coalition_bound(open("1"), 2), PreconditionViolated);
}

TEST_CASE("stable diameter limit") {
  CHECK(stable_diameter_limit(open("1,0,-1")) == 6);
  CHECK(stable_diameter_limit(open("3,1,-1")) == 18);
  CHECK_THROWS_AS(stable_diameter_limit(closed("1,0,-1")), Unsupported);
  CHECK_THROWS_AS(stable_diameter_limit(open("3,1")), PreconditionViolated);
  CHECK_THROWS_AS(stable_diameter_limit(open("0,-1")), PreconditionViolated);

  // Path of 9 agents has diameter 8 > 6: an endpoint loses.
  const auto s = open("1,0,-1");
  const auto p9 = path(9);
  const auto grand = Outcome::grand(9);
  CHECK(coalition_diameter(p9, grand.coalitions()[0]) == ExtendedValue(8));
  CHECK(agent_utility(s, p9, grand, 0) == ExtendedValue(-5));
  CHECK_FALSE(is_individually_rational(s, p9, grand));
  const auto cert = certify_outcome(s, p9, grand, Mode::ir);
  CHECK_FALSE(cert.satisfied());
  CHECK(cert.bound_violations.size() == 1);
}

TEST_CASE("bound report") {
  const auto r = bound_report(closed("1,-3"), 4, 3);
  CHECK(r.max_coalition_size_degree == degree_coalition_bound(closed("1,-3"), 4));
  CHECK(r.max_coalition_size_treewidth == 13);
  CHECK_FALSE(r.stable_diameter_limit);
  CHECK(r.welfare_diameter_limit == 2);
  const auto o = bound_report(open("1,0,-1"), 4, std::nullopt);
  CHECK_FALSE(o.max_coalition_size_degree);
  CHECK_FALSE(o.max_coalition_size_treewidth);
  CHECK(o.stable_diameter_limit == 6);
}

TEST_CASE("certificates") {
  const auto g1 = figure(1);
  const auto bold = outcome_file("fig1_bold.out", 7);
  const auto c = certify_outcome(closed("1,0,-1"), g1, bold, Mode::welfare);
  CHECK(c.welfare == ExtendedValue(18));
  CHECK(c.satisfied());
  for (const auto& cr : c.coalitions) CHECK(cr.diameter <= ExtendedValue(3));
  CHECK(c.coalitions[0].welfare == ExtendedValue(18));
  CHECK(c.bound_violations.empty());

  const auto single = certify_outcome(closed("1,0,-1"), g1, Outcome::singletons(7), Mode::ns);
  CHECK(single.welfare == ExtendedValue(0));
  CHECK(single.individually_rational);
  for (const auto& cr : single.coalitions) CHECK(cr.diameter == ExtendedValue(0));

  const auto g2 = figure(2);
  const auto grand = certify_outcome(closed("1,1,-1,-1,-1,-1"), g2, Outcome::grand(10), Mode::ir);
  CHECK(grand.welfare == ExtendedValue(62));
  CHECK_FALSE(grand.individually_rational);
  REQUIRE(grand.violations.size() == 1);
  CHECK(grand.violations[0] == "not individually rational: agent 3 has utility -1");
  CHECK(grand.utilities[PX] == ExtendedValue(-1));
}
