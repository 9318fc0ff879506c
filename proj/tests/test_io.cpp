// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include <doctest.h>

#include "fixtures.hpp"
#include "sdg/errors.hpp"
#include "sdg/oracle.hpp"

using namespace sdg;
using namespace fixtures;

TEST_CASE("graph files") {
  const auto g = read_graph("c comment\np tw 3 2\n1 2\n2 3\n");
  CHECK(g.size() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK(read_graph(write_graph(g, {"x"})).edges() == g.edges());

  const auto list = read_graph("0 1\n1 2\n");
  CHECK(list.size() == 3);
  CHECK(list.edge_count() == 2);

  CHECK(read_graph("p tw 1 0\n").size() == 1);
  CHECK_THROWS_AS(read_graph("p tw 3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(read_graph("p tw 3 1\n1 4\n"), ParseError);
  CHECK_THROWS_AS(read_graph("p tw 3 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(read_graph("p tw 3 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(read_graph("p tw 3 2\n1 2\n1 2\n"), ParseError);
}

TEST_CASE("outcome files") {
  const auto pi = read_outcome("c comment\n1 2\n3\n", 3);
  CHECK(pi == Outcome({{0, 1}, {2}}, 3));
  CHECK(read_outcome(write_outcome(pi), 3) == pi);
  CHECK_THROWS_WITH_AS(read_outcome("1 2\n2 3\n", 3), doctest::Contains("agent 2 already placed on line 1"), ParseError);
  CHECK_THROWS_WITH_AS(read_outcome("1 2\n", 3), doctest::Contains("agent 3 is in no coalition"), ParseError);
  CHECK_THROWS_AS(read_outcome("1 4\n2 3\n", 3), ParseError);
  CHECK_THROWS_AS(read_outcome("1 b\n", 2), ParseError);
}

TEST_CASE("JSON round trips") {
  CHECK(to_json(ExtendedValue::neg_inf()) == "-inf");
  CHECK(extended_from_json(to_json(ExtendedValue(-4))) == ExtendedValue(-4));
  CHECK(extended_from_json(to_json(ExtendedValue::neg_inf())).is_neg_inf());
  CHECK_THROWS_AS(extended_from_json(nlohmann::json("inf")), InvalidArgument);

  const auto g3 = figure(3);
  const auto s = closed("1,1,-1,-1,-1,-1");
  for (Mode mode : {Mode::welfare, Mode::ir, Mode::ns}) {
    const auto r = brute_force_solve(s, g3, mode);
    REQUIRE(r);
    const auto j = to_json(*r);
    CHECK(j.at("agents") == 10);
    CHECK(solve_result_from_json(j) == *r);
    CHECK(solve_result_from_json(nlohmann::json::parse(j.dump())) == *r);
  }
  SolveResult odd{Outcome({{0, 1}}, 2), ExtendedValue::neg_inf(), Mode::ir, false, "fptdp"};
  CHECK(solve_result_from_json(to_json(odd)) == odd);

  auto j = to_json(odd);
  j["outcome"] = nlohmann::json::array({nlohmann::json::array({1})});
  CHECK_THROWS_AS(solve_result_from_json(j), InvalidArgument);
  CHECK_THROWS_AS(solve_result_from_json(nlohmann::json::object()), InvalidArgument);
  CHECK(to_json(Outcome({{0, 2}, {1}}, 3)).dump() == "[[1,3],[2]]");
  CHECK(outcome_from_json(nlohmann::json::parse("[[2],[1,3]]")) == Outcome({{0, 2}, {1}}, 3));
}

TEST_CASE("certificate JSON") {
  const auto g2 = figure(2);
  const auto c = certify_outcome(closed("1,1,-1,-1,-1,-1"), g2, Outcome::grand(10), Mode::ir);
  const auto j = to_json(c);
  CHECK(j.at("welfare") == 62);
  CHECK(j.at("individually_rational") == false);
  CHECK(j.at("ir_deviation").at("agent") == 3);
  CHECK(j.at("utilities")[PX] == -1);
  CHECK(j.at("coalitions")[0].at("members").size() == 10);
}
