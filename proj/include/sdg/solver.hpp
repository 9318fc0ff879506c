// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdg/fptdp.hpp"
#include "sdg/oracle.hpp"
#include "sdg/solve.hpp"
#include "sdg/treedecomp.hpp"
#include "sdg/twdp.hpp"
#include "sdg/vc.hpp"

namespace sdg {

enum class Algorithm { automatic, brute, twdp, fptdp, vc };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view text);

struct SolveOptions {
  Algorithm algorithm = Algorithm::automatic;
  std::optional<int> sz;                 // fptdp coalition cap; default select_sz, else n
  std::optional<TreeDecomposition> td;   // for the whole network; restricted per component
  OracleOptions oracle;
  TwdpOptions twdp;
  FptOptions fpt;
  VcOptions vc;
};

struct ComponentReport {
  std::vector<Agent> agents;
  Algorithm algorithm = Algorithm::brute;
  std::string reason;  // why the algorithm was picked
  double seconds = 0;
};

struct SolveReport {
  std::optional<SolveResult> result;  // empty: no Nash stable outcome
  std::vector<ComponentReport> components;
  double seconds = 0;
};

// Algorithm `automatic` would use on a connected network.
Algorithm select_algorithm(const ScoringVector& s, const SocialNetwork& g, Mode mode, std::string* reason = nullptr);

// Solves each connected component separately and merges the results.
SolveReport solve(const ScoringVector& s, const SocialNetwork& g, Mode mode, const SolveOptions& opts = {});

// Runs one algorithm on a connected network.
std::optional<SolveResult> solve_with(Algorithm a, const ScoringVector& s, const SocialNetwork& g, Mode mode,
                                      const SolveOptions& opts = {}, const TreeDecomposition* td = nullptr);

}  // namespace sdg
