// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sdg/core.hpp"

namespace sdg {

// Not-all-equal 3-SAT formula. Literals use DIMACS numbering: +v / -v for
// variable v in 1..variables.
struct NaeFormula {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;

  // DIMACS CNF with a "c nae3sat" comment marking NAE semantics; every clause
  // has exactly three literals.
  static NaeFormula parse(std::string_view text);
  std::string to_dimacs() const;
  // Some assignment gives every clause both a true and a false literal.
  bool satisfiable() const;
};

NaeFormula random_nae_formula(int variables, int clauses, std::mt19937_64& rng);

struct TriangleCoveredGraph {
  SocialNetwork graph;
  std::vector<std::array<Agent, 3>> triangles;  // disjoint, covering every vertex
};

// Variable i (0-based) owns vertices 3i (a_i), 3i+1 (x_i), 3i+2 (not x_i);
// clause j owns 3(variables+j)+r for its r-th literal.
TriangleCoveredGraph nae_to_3ctcg(const NaeFormula& phi);

struct SdgInstance {
  SocialNetwork network;
  std::int64_t target = 0;
};

// Complement network with target 3m * s1 * (m - 1) for 3m vertices. Needs a
// closed vector with delta = 1.
SdgInstance ctcg_to_sdg(const TriangleCoveredGraph& h, const ScoringVector& s);

// Backtracking 3-colouring; colours 0..2 per vertex.
std::optional<std::vector<int>> three_coloring(const SocialNetwork& g);
std::vector<std::vector<int>> all_three_colorings(const SocialNetwork& g);

}  // namespace sdg
