// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/generators.hpp"

#include <algorithm>

#include "sdg/errors.hpp"

namespace sdg {

SocialNetwork random_partial_ktree(int n, int k, double keep, std::mt19937_64& rng) {
  if (n < 1 || k < 1) throw InvalidArgument("random k-tree needs n >= 1 and k >= 1");
  std::bernoulli_distribution coin(keep);
  SocialNetwork g(n);
  const int base = std::min(n, k + 1);
  for (int v = 1; v < base; ++v)
    for (int u = 0; u < v; ++u)
      if (u == v - 1 || coin(rng)) g.add_edge(u, v);
  if (n <= k + 1) return g;

  std::vector<std::vector<Agent>> cliques;
  for (int drop = 0; drop <= k; ++drop) {
    std::vector<Agent> q;
    for (int u = 0; u <= k; ++u)
      if (u != drop) q.push_back(u);
    cliques.push_back(std::move(q));
  }
  for (int v = k + 1; v < n; ++v) {
    std::uniform_int_distribution<size_t> pick(0, cliques.size() - 1);
    const auto q = cliques[pick(rng)];
    std::uniform_int_distribution<int> anchor(0, k - 1);
    const int forced = anchor(rng);
    for (int i = 0; i < k; ++i)
      if (i == forced || coin(rng)) g.add_edge(q[i], v);
    for (int i = 0; i < k; ++i) {
      auto next = q;
      next[i] = v;
      cliques.push_back(std::move(next));
    }
  }
  return g;
}

SocialNetwork random_bounded_degree(int n, int max_degree, double p, bool connected,
                                    std::mt19937_64& rng) {
  if (n < 1 || max_degree < 0) throw InvalidArgument("bad random graph parameters");
  if (connected && n > 2 && max_degree < 2) throw InvalidArgument("connected graph needs max degree >= 2");
  SocialNetwork g(n);
  if (connected) {
    for (Agent v = 1; v < n; ++v) {
      std::vector<Agent> open;
      for (Agent u = 0; u < v; ++u)
        if (g.degree(u) < max_degree) open.push_back(u);
      std::uniform_int_distribution<size_t> pick(0, open.size() - 1);
      g.add_edge(open[pick(rng)], v);
    }
  }
  std::vector<std::pair<Agent, Agent>> pairs;
  for (Agent u = 0; u < n; ++u)
    for (Agent v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution coin(p);
  for (auto [u, v] : pairs)
    if (!g.adjacent(u, v) && g.degree(u) < max_degree && g.degree(v) < max_degree && coin(rng))
      g.add_edge(u, v);
  return g;
}

}  // namespace sdg
