// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include <doctest.h>

#include "fixtures.hpp"
#include "sdg/errors.hpp"
#include "sdg/generators.hpp"
#include "sdg/solver.hpp"

using namespace sdg;
using namespace fixtures;

TEST_CASE("algorithm names") {
  for (Algorithm a : {Algorithm::automatic, Algorithm::brute, Algorithm::twdp, Algorithm::fptdp, Algorithm::vc})
    CHECK(parse_algorithm(to_string(a)) == a);
  CHECK_THROWS_AS(parse_algorithm("ilp"), InvalidArgument);
}

TEST_CASE("automatic selection") {
  std::string why;
  CHECK(select_algorithm(closed("1"), path(10), Mode::welfare, &why) == Algorithm::brute);
  CHECK(why.find("10 agents") != std::string::npos);
  CHECK(select_algorithm(closed("1,0,-1"), path(30), Mode::welfare) == Algorithm::twdp);
  CHECK(select_algorithm(open("1,-3"), path(30), Mode::welfare) == Algorithm::fptdp);
  // Open tail, s(2) >= 0, small cover.
  CHECK(select_algorithm(open("1,0"), star(20), Mode::welfare) == Algorithm::vc);
  CHECK(select_algorithm(open("1,0"), clique(14), Mode::welfare, &why) == Algorithm::brute);
  CHECK(why.find("raised") != std::string::npos);
}

TEST_CASE("component-wise solving") {
  // fig1.gr next to a triangle and an isolated agent.
  const auto f = figure(1);
  auto edges = f.edges();
  for (auto [u, v] : std::vector<std::pair<Agent, Agent>>{{7, 8}, {8, 9}, {7, 9}}) edges.push_back({u, v});
  const SocialNetwork g(11, edges);
  for (Algorithm a : {Algorithm::automatic, Algorithm::brute, Algorithm::twdp, Algorithm::fptdp, Algorithm::vc}) {
    SolveOptions opts;
    opts.algorithm = a;
    const auto rep = solve(closed("1,0,-1"), g, Mode::ns, opts);
    REQUIRE(rep.result);
    CHECK(rep.result->welfare == ExtendedValue(18 + 6));
    CHECK(rep.components.size() == 3);
    CHECK(satisfies(closed("1,0,-1"), g, rep.result->outcome, Mode::ns));
  }
}

TEST_CASE("solve options") {
  const auto g = figure(1);
  SolveOptions opts;
  opts.algorithm = Algorithm::twdp;
  CHECK_THROWS_AS(solve(open("1"), g, Mode::welfare, opts), Unsupported);

  opts.td = TreeDecomposition{7, {{0, 1, 2, 3, 4, 5, 6}}, {}};
  CHECK(solve(closed("1,0,-1"), g, Mode::welfare, opts).result->welfare == ExtendedValue(18));
  opts.td = TreeDecomposition{7, {{0, 1}}, {}};
  CHECK_THROWS_AS(solve(closed("1,0,-1"), g, Mode::welfare, opts), InvalidArgument);
  opts.td = TreeDecomposition{3, {{0, 1, 2}}, {}};
  CHECK_THROWS_AS(solve(closed("1,0,-1"), g, Mode::welfare, opts), InvalidArgument);

  SolveOptions capped;
  capped.algorithm = Algorithm::fptdp;
  capped.sz = 2;
  const auto r = solve(closed("1,0,-1"), g, Mode::welfare, capped);
  REQUIRE(r.result);
  CHECK_FALSE(r.result->optimal);
  CHECK(r.result->welfare < ExtendedValue(18));

  const auto tri = solve(closed("1"), clique(3), Mode::ns, capped);
  CHECK_FALSE(tri.result);

  const auto empty = solve(closed("1"), SocialNetwork(0), Mode::ns);
  REQUIRE(empty.result);
  CHECK(empty.result->welfare == ExtendedValue(0));
}
