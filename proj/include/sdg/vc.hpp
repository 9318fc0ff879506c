// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sdg/solve.hpp"

namespace sdg {

// Minimum vertex cover by branching; throws ResourceLimit past `node_budget`.
std::vector<Agent> compute_vertex_cover(const SocialNetwork& g, long long node_budget = 10'000'000);

// Agents outside the cover grouped by their (non-empty) neighbourhood W.
struct NeighborhoodClass {
  std::vector<Agent> cover;   // W, sorted
  std::vector<Agent> agents;  // agents whose neighbourhood is exactly W
};

std::vector<NeighborhoodClass> neighborhood_classes(const SocialNetwork& g, const std::vector<Agent>& cover);

// One guess of the coalitions restricted to the cover: the cover parts and,
// per part, which classes have at least one agent in that coalition. A class
// may only be declared in a part it has a neighbour in.
struct CoverStructure {
  std::vector<std::vector<Agent>> parts;
  std::vector<std::vector<int>> declared;  // class indices per part, ascending
};

// Calls `visit` on every structure whose coalitions are connected.
void for_each_structure(const SocialNetwork& g, const std::vector<Agent>& cover,
                        const std::vector<NeighborhoodClass>& classes,
                        const std::function<void(const CoverStructure&)>& visit);
std::vector<CoverStructure> enumerate_structures(const SocialNetwork& g, const std::vector<Agent>& cover);

// maximize constant + linear.x + sum_{i<=j} quadratic[i][j] x_i x_j over
// integers 1 <= x_i <= var_upper[i], with sum of the variables of class c at
// most class_size[c]; the difference is the number of leftover singletons of c.
// Every constraint reads constant + coef.x >= 0 and, when when_slack >= 0,
// only applies if class when_slack has a leftover singleton.
struct QuadraticProgram {
  struct Constraint {
    std::int64_t constant = 0;
    std::vector<std::int64_t> coef;
    int when_slack = -1;
  };

  std::vector<int> var_class;
  std::vector<int> var_upper;
  std::vector<int> class_size;
  std::int64_t constant = 0;
  std::vector<std::int64_t> linear;
  std::vector<std::vector<std::int64_t>> quadratic;
  std::vector<Constraint> constraints;

  std::int64_t objective(const std::vector<int>& x) const;
  bool feasible(const std::vector<int>& x) const;
};

struct QpSolution {
  std::vector<int> x;
  std::int64_t objective = 0;
};

// Exhaustive search; the first optimum in lexicographic order of x wins.
std::optional<QpSolution> solve_qp(const QuadraticProgram& qp, long long node_budget = 50'000'000);

// Program for one structure under `mode`; empty if the structure forces an
// agent to -inf (a declared pair further apart than a closed vector allows).
std::optional<QuadraticProgram> build_qp(const ScoringVector& s, const SocialNetwork& g,
                                         const std::vector<NeighborhoodClass>& classes,
                                         const CoverStructure& st, Mode mode);

struct VcOptions {
  int max_cover = 16;
  long long cover_nodes = 10'000'000;
  long long qp_nodes = 50'000'000;
  long long max_structures = 2'000'000;
};

std::optional<SolveResult> solve_vc(const ScoringVector& s, const SocialNetwork& g, Mode mode,
                                    const VcOptions& opts = {});

}  // namespace sdg
