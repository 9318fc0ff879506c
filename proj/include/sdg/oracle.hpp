// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdg/solve.hpp"

namespace sdg {

// Set partitions of {0..n-1} as restricted growth strings, in lexicographic order.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n);
  const std::vector<int>& current() const { return rgs_; }
  // Advances to the next partition; false once all have been produced.
  bool next();

 private:
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;  // max of rgs_[0..k]
};

std::uint64_t bell_number(int n);

struct OracleOptions {
  int max_agents = 12;
  // Skip partitions containing a coalition of diameter > delta
  // (closed tail, welfare mode only).
  bool prune_diameter = true;
  bool parallel = true;
};

// Maximum-welfare outcome satisfying `mode`, lexicographically smallest among
// ties. Empty only for ns when no Nash-stable outcome exists.
std::optional<SolveResult> brute_force_solve(const ScoringVector& s, const SocialNetwork& g,
                                             Mode mode, const OracleOptions& opts = {});

bool decide_welfare_at_least(const ScoringVector& s, const SocialNetwork& g, std::int64_t b,
                             Mode mode, const OracleOptions& opts = {});

}  // namespace sdg
