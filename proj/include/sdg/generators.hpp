// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <random>

#include "sdg/core.hpp"

namespace sdg {

// Connected subgraph of a random k-tree on n agents, so treewidth <= k.
// Every non-forced edge of the k-tree is kept with probability keep.
SocialNetwork random_partial_ktree(int n, int k, double keep, std::mt19937_64& rng);

// Random graph with maximum degree <= max_degree. With connected=true a
// degree-capped random spanning tree is laid down first (max_degree >= 2).
SocialNetwork random_bounded_degree(int n, int max_degree, double p, bool connected,
                                    std::mt19937_64& rng);

}  // namespace sdg
