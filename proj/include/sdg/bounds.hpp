// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdg/core.hpp"
#include "sdg/stability.hpp"

namespace sdg {

// Closed tail only. Any coalition with more agents gives every member
// negative utility, so it never appears in an optimal, IR or NS outcome.
//   ball(k) = sum_{j=1..k} D(D-1)^(j-1)   (agents within distance k of one agent)
//   bound   = 1 + ball(delta)                          always
//           = (max(s1,0)+1) * ball(delta-1) + 1        if s_delta < 0
// and the smaller applicable value is returned.
int degree_coalition_bound(const ScoringVector& s, int max_degree);

// Requires s(2) < 0. Any larger coalition has negative total utility.
// Returns max(1, 2*(s1+1)*tw + 1).
int treewidth_coalition_bound(const ScoringVector& s, int tw);

// Open tail, s1 > 0 and s_delta < 0. A coalition of larger diameter leaves
// some member with negative utility. Returns 2*s1*delta.
int stable_diameter_limit(const ScoringVector& s);

struct BoundReport {
  std::optional<int> max_coalition_size_degree;
  std::optional<int> max_coalition_size_treewidth;
  std::optional<int> stable_diameter_limit;
  int welfare_diameter_limit = 0;
};

// Every bound whose premise holds; `tw` may be any treewidth upper bound.
BoundReport bound_report(const ScoringVector& s, int max_degree, std::optional<int> tw);

struct CoalitionReport {
  std::vector<Agent> members;
  ExtendedValue diameter;
  ExtendedValue welfare;
};

struct Certificate {
  Mode mode = Mode::welfare;
  ExtendedValue welfare;
  std::vector<ExtendedValue> utilities;
  bool individually_rational = false;
  bool nash_stable = false;
  std::optional<Deviation> ir_deviation;
  std::optional<Deviation> ns_deviation;
  std::vector<CoalitionReport> coalitions;
  BoundReport bounds;
  // Failures of the mode's stability predicate.
  std::vector<std::string> violations;
  // Coalitions exceeding a size or diameter bound whose premise holds.
  std::vector<std::string> bound_violations;

  bool satisfied() const { return violations.empty(); }
};

Certificate certify_outcome(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi,
                            Mode mode);

}  // namespace sdg
