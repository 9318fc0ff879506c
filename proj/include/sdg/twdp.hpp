// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sdg/solve.hpp"
#include "sdg/treedecomp.hpp"

namespace sdg {

// Dynamic program over a nice tree decomposition, closed scoring vectors only.
//
// A record signature holds, for the current bag:
//   - the partition of bag agents into coalition labels,
//   - the declared final distance between every two bag agents of one label,
//   - per label, the multiset of forgotten members' final distance vectors
//     to the label's bag agents,
// and, in ir/ns mode, the partial utilities needed to decide stability once a
// coalition is complete. Declared distances are checked to be a metric that
// is 1 exactly on edges, and each is checked to be realized by a neighbour one
// step closer when its agent is forgotten; together these make every declared
// and derived distance equal the true induced distance.
struct TwdpOptions {
  std::size_t max_records_per_node = 300'000;
};

struct TwdpStats {
  std::vector<std::size_t> records_per_node;
  std::size_t max_records = 0;
};

std::optional<SolveResult> solve_tw(const ScoringVector& s, const SocialNetwork& g,
                                    const NiceTreeDecomposition& d, Mode mode,
                                    const TwdpOptions& opts = {}, TwdpStats* stats = nullptr);

SolveResult solve_tw_welfare(const ScoringVector& s, const SocialNetwork& g, const NiceTreeDecomposition& d);
SolveResult solve_tw_ir(const ScoringVector& s, const SocialNetwork& g, const NiceTreeDecomposition& d);
std::optional<SolveResult> solve_tw_ns(const ScoringVector& s, const SocialNetwork& g,
                                       const NiceTreeDecomposition& d);

}  // namespace sdg
