// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sdg/solve.hpp"
#include "sdg/treedecomp.hpp"

namespace sdg {

// Dynamic program over a nice tree decomposition restricted to coalitions of
// at most sz agents. Each active coalition is kept as its induced graph: bag
// agents named, forgotten members anonymous. A coalition's welfare is added
// when its last member is forgotten, at which point the whole induced graph is
// known. In ns mode the graph also holds edges between agents of different
// active coalitions, each member carries the best utility it could get
// elsewhere, and completed neighbours are kept as guests with their final
// utility. States are canonicalised up to isomorphism fixing the bag.
struct FptOptions {
  std::size_t max_records_per_node = 300'000;
  // Permutations tried per state when canonicalising; beyond it a
  // deterministic but non-canonical order is used (more states, same answer).
  int canonical_budget = 5040;
};

struct FptStats {
  std::size_t max_records = 0;
  std::size_t total_records = 0;
};

// Smallest coalition-size bound that provably holds for optimal outcomes in
// every mode, clamped to n; empty when none applies.
std::optional<int> select_sz(const ScoringVector& s, const SocialNetwork& g);

// result.optimal is false when sz is below both n and select_sz, i.e. the
// answer is only optimal among outcomes with coalitions of at most sz agents.
std::optional<SolveResult> solve_fpt(const ScoringVector& s, const SocialNetwork& g,
                                     const NiceTreeDecomposition& d, int sz, Mode mode,
                                     const FptOptions& opts = {}, FptStats* stats = nullptr);

}  // namespace sdg
