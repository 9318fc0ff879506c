// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include <doctest.h>

#include "fixtures.hpp"
#include "sdg/errors.hpp"

using namespace sdg;
using namespace fixtures;

TEST_CASE("extended values") {
  const auto ninf = ExtendedValue::neg_inf();
  CHECK(ExtendedValue(3) + ExtendedValue(-5) == ExtendedValue(-2));
  CHECK((ninf + ExtendedValue(7)).is_neg_inf());
  CHECK(ninf < ExtendedValue(-1000000));
  CHECK(ninf == ExtendedValue::neg_inf());
  CHECK(ExtendedValue(2) - ExtendedValue(5) == ExtendedValue(-3));
  CHECK_THROWS_AS((void)ninf.value(), InvalidArgument);
  CHECK_THROWS_AS((void)(ninf - ExtendedValue(1)), InvalidArgument);
  CHECK(ninf.to_string() == "-inf");
}

TEST_CASE("scoring vectors") {
  CHECK(closed("1,0,-1").delta() == 3);
  CHECK(closed(" 2, 1 ").scores() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(closed(""), InvalidArgument);
  CHECK_THROWS_AS(closed("1,2"), InvalidArgument);
  CHECK_THROWS_AS(closed("1,x"), InvalidArgument);
  CHECK(parse_tail("open") == Tail::open);
  CHECK_THROWS_AS(parse_tail("half"), InvalidArgument);
}

TEST_CASE("score_at") {
  const auto s = closed("1,0,-1");
  CHECK(score_at(s, 2) == ExtendedValue(0));
  CHECK(score_at(s, 1) == ExtendedValue(1));
  CHECK(score_at(s, 4).is_neg_inf());
  CHECK(score_at(open("1,0,-1"), 4) == ExtendedValue(-1));
  CHECK(score_at(open("1,0,-1"), 40) == ExtendedValue(-1));
  CHECK(score_at(s, ExtendedValue::neg_inf()).is_neg_inf());
  CHECK(score_at(open("1,0,-1"), ExtendedValue::neg_inf()).is_neg_inf());
  CHECK_THROWS_AS(score_at(s, 0), InvalidArgument);
  CHECK_THROWS_AS(score_at(s, -2), InvalidArgument);
}

TEST_CASE("networks") {
  CHECK_THROWS_AS(SocialNetwork(3, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(SocialNetwork(3, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(SocialNetwork(3, {{0, 3}}), InvalidArgument);

  const auto g = figure(1);
  CHECK(g.size() == 7);
  CHECK(g.edge_count() == 11);
  CHECK(g.max_degree() == 4);
  CHECK(g.components().size() == 1);

  const auto h = g.induced({X1, Y1, X});
  CHECK(h.size() == 3);
  CHECK(h.adjacent(0, 2));
  CHECK_FALSE(h.adjacent(0, 1));
  CHECK(h.components().size() == 2);

  const auto c = g.complement();
  CHECK(c.edge_count() == 21 - 11);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (i != j) CHECK(c.adjacent(i, j) != g.adjacent(i, j));
}

TEST_CASE("outcomes") {
  const Outcome pi({{3, 1}, {0}, {2}}, 4);
  CHECK(pi.coalitions() == std::vector<std::vector<Agent>>{{0}, {1, 3}, {2}});
  CHECK(pi.labels() == std::vector<int>{0, 1, 2, 1});
  CHECK(Outcome::from_labels({7, 3, 7, 3}) == Outcome({{0, 2}, {1, 3}}, 4));
  CHECK_FALSE(Outcome::singletons(2) < Outcome::grand(2));
  CHECK(Outcome::grand(2) < Outcome::singletons(2));
  CHECK_THROWS_WITH_AS(Outcome({{0, 1}, {1, 2}}, 3), "agent 1 appears in two coalitions", InvalidArgument);
  CHECK_THROWS_WITH_AS(Outcome({{0}}, 2), "agent 1 is in no coalition", InvalidArgument);
  CHECK_THROWS_AS(Outcome({{0, 5}}, 2), InvalidArgument);
  CHECK_THROWS_AS(Outcome({{0}, {}}, 1), InvalidArgument);
}

TEST_CASE("coalition distances on the first figure") {
  const auto g = figure(1);
  const std::vector<Agent> bold{X, A1, A2, A3, Y};
  CHECK(coalition_distance(g, bold, X, Y) == ExtendedValue(2));
  CHECK(coalition_distance(g, bold, A2, A2) == ExtendedValue(0));
  CHECK(coalition_distance(g, {X1, Y1}, X1, Y1).is_neg_inf());
  CHECK_THROWS_AS(coalition_distance(g, bold, X, X1), InvalidArgument);
  CHECK(coalition_diameter(g, bold) == ExtendedValue(2));
  CHECK(coalition_diameter(g, {X1}) == ExtendedValue(0));
  CHECK(coalition_diameter(g, {X1, Y1}).is_neg_inf());
  // x1 reaches y1 only through x, the triangle and y.
  CHECK(coalition_distance(g, {X1, X, A2, Y, Y1}, X1, Y1) == ExtendedValue(4));
}

TEST_CASE("utilities and welfare") {
  const auto g1 = figure(1);
  const auto bold = outcome_file("fig1_bold.out", 7);
  const auto dashed = outcome_file("fig1_dashed.out", 7);
  CHECK(social_welfare(closed("1,0,-1"), g1, bold) == ExtendedValue(18));
  CHECK(social_welfare(closed("1,-3"), g1, bold) == ExtendedValue(12));
  CHECK(social_welfare(closed("1,-3"), g1, dashed) == ExtendedValue(14));
  CHECK(social_welfare(closed("1,0,-1"), g1, Outcome::singletons(7)) == ExtendedValue(0));
  CHECK(agent_utility(closed("1,0,-1"), g1, bold, X1) == ExtendedValue(0));

  const auto g2 = figure(2);
  const auto s = closed("1,1,-1,-1,-1,-1");
  const auto grand = Outcome::grand(10);
  CHECK(agent_utility(s, g2, grand, PX) == ExtendedValue(-1));
  for (Agent a = 0; a < 10; ++a)
    if (a != PX) CHECK(agent_utility(s, g2, grand, a) == ExtendedValue(7));
  CHECK(social_welfare(s, g2, grand) == ExtendedValue(62));

  // Disconnected coalition under either tail.
  const auto two = Outcome({{X1, Y1}, {X, A1, A2, A3, Y}}, 7);
  CHECK(agent_utility(closed("1"), g1, two, X1).is_neg_inf());
  CHECK(agent_utility(open("1"), g1, two, X1).is_neg_inf());
  CHECK(social_welfare(open("1"), g1, two).is_neg_inf());
}

TEST_CASE("library evaluator agrees with the reference evaluator") {
  std::mt19937_64 rng(11);
  const std::vector<ScoringVector> vectors{closed("1"), closed("2,0,-1"), open("1,-1"), open("3,1,-2"),
                                           closed("1,1,-1,-1,-1,-1")};
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const auto g = random_graph(n, 0.45, rng);
    std::vector<int> label(n);
    for (auto& l : label) l = static_cast<int>(rng() % 3);
    const auto pi = Outcome::from_labels(label);
    for (const auto& s : vectors) {
      const auto ref = ref_utilities(s, g, label);
      for (Agent i = 0; i < n; ++i) CHECK(as_optional(agent_utility(s, g, pi, i)) == ref[i]);
      CHECK(as_optional(social_welfare(s, g, pi)) == ref_welfare(s, g, label));
    }
  }
}
