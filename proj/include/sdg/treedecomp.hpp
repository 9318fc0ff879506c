// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdg/core.hpp"

namespace sdg {

struct TreeDecomposition {
  int vertex_count = 0;
  std::vector<std::vector<Agent>> bags;      // sorted, 0-indexed agents
  std::vector<std::pair<int, int>> edges;    // between bag indices

  // Max bag size - 1 (-1 for no bags).
  int width() const;
};

// PACE .td text, 1-indexed vertices and bags.
TreeDecomposition read_td(std::string_view content);
std::string write_td(const TreeDecomposition& td);

struct TdViolation {
  enum class Kind { vertex_range, vertex_coverage, edge_coverage, not_a_tree, disconnected_occurrence };
  Kind kind;
  std::string message;
};

struct TdValidation {
  std::optional<int> width;              // set when valid
  std::optional<TdViolation> violation;  // first violated condition
  bool ok() const { return width.has_value(); }
};

TdValidation validate(const SocialNetwork& g, const TreeDecomposition& td);

struct DecompositionBudget {
  int exact_max_vertices = 30;
  long long search_nodes = 2'000'000;
};

struct ComputedDecomposition {
  TreeDecomposition decomposition;
  bool exact = false;  // width is the treewidth
};

// Branch and bound over elimination orders when the graph is small enough,
// min-fill elimination otherwise or when the budget runs out.
ComputedDecomposition compute_decomposition(const SocialNetwork& g,
                                            const DecompositionBudget& budget = {});

// Width of the best elimination order by exhaustive enumeration (n <= 10).
int treewidth_by_enumeration(const SocialNetwork& g);

TreeDecomposition decomposition_from_order(const SocialNetwork& g, const std::vector<Agent>& order);

enum class NodeKind { leaf, introduce, forget, join };

struct NiceNode {
  NodeKind kind = NodeKind::leaf;
  Agent agent = -1;  // introduced or forgotten agent
  std::vector<Agent> bag;
  std::vector<int> children;
};

// Children always precede their parent in `nodes`; the root is the last node.
struct NiceTreeDecomposition {
  int vertex_count = 0;
  std::vector<NiceNode> nodes;
  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const;
};

// Throws InvalidArgument when td is not a tree with connected occurrences.
NiceTreeDecomposition make_nice(const TreeDecomposition& td);

// First violation of niceness or decomposition validity, if any.
std::optional<std::string> check_nice(const SocialNetwork& g, const NiceTreeDecomposition& ntd);

}  // namespace sdg
