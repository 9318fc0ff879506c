// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

// Shared test data and a reference evaluator written independently of the
// library (Floyd-Warshall distances, recursive partition enumeration).

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sdg/core.hpp"
#include "sdg/io.hpp"
#include "sdg/stability.hpp"

namespace fixtures {

using sdg::Agent;
using sdg::ExtendedValue;
using sdg::Mode;
using sdg::Outcome;
using sdg::ScoringVector;
using sdg::SocialNetwork;
using sdg::Tail;

inline std::string data_path(const std::string& rel) { return std::string(SDG_DATA_DIR) + "/" + rel; }

inline SocialNetwork figure(int k) {
  return sdg::read_graph(sdg::read_file(data_path("figures/fig" + std::to_string(k) + ".gr")));
}

inline Outcome outcome_file(const std::string& name, int n) {
  return sdg::read_outcome(sdg::read_file(data_path("figures/" + name)), n);
}

// Agents of fig1.gr.
enum Fig1 { X = 0, A1, A2, A3, Y, X1, Y1 };
// Agents of fig2.gr and fig3.gr; K is 5.., fig3.gr adds agent 9.
enum Fig23 { P1 = 0, P2, PX, P4, P5, K0 };
inline constexpr Agent kFig3Y = 9;

inline ScoringVector closed(const std::string& text) { return ScoringVector::parse(text, Tail::closed); }
inline ScoringVector open(const std::string& text) { return ScoringVector::parse(text, Tail::open); }

inline const std::vector<ScoringVector>& sweep_vectors() {
  static const std::vector<ScoringVector> v{closed("1"), closed("1,-3"), closed("1,0,-1"), closed("1,1,-1,-1,-1,-1")};
  return v;
}

// --- reference evaluator ---

constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> coalition_apsp(const SocialNetwork& g, const std::vector<int>& label) {
  const int n = g.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && label[i] == label[j] && g.adjacent(i, j)) d[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// nullopt stands for -inf.
inline std::optional<std::int64_t> ref_score(const ScoringVector& s, int d) {
  if (d >= kInf) return std::nullopt;
  if (d <= s.delta()) return s.scores()[d - 1];
  if (s.tail() == Tail::open) return s.scores().back();
  return std::nullopt;
}

inline std::vector<std::optional<std::int64_t>> ref_utilities(const ScoringVector& s, const SocialNetwork& g,
                                                              const std::vector<int>& label) {
  const auto d = coalition_apsp(g, label);
  std::vector<std::optional<std::int64_t>> u(g.size(), 0);
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) {
      if (i == j || label[i] != label[j] || !u[i]) continue;
      auto v = ref_score(s, d[i][j]);
      u[i] = v ? std::optional<std::int64_t>(*u[i] + *v) : std::nullopt;
    }
  return u;
}

inline std::optional<std::int64_t> ref_welfare(const ScoringVector& s, const SocialNetwork& g,
                                               const std::vector<int>& label) {
  std::int64_t total = 0;
  for (const auto& u : ref_utilities(s, g, label)) {
    if (!u) return std::nullopt;
    total += *u;
  }
  return total;
}

inline bool ref_less(const std::optional<std::int64_t>& a, const std::optional<std::int64_t>& b) {
  if (!b) return false;
  if (!a) return true;
  return *a < *b;
}

inline bool ref_stable(const ScoringVector& s, const SocialNetwork& g, const std::vector<int>& label, Mode mode) {
  if (mode == Mode::welfare) return true;
  const auto u = ref_utilities(s, g, label);
  for (int i = 0; i < g.size(); ++i)
    if (ref_less(u[i], 0)) return false;
  if (mode == Mode::ir) return true;
  const int groups = *std::max_element(label.begin(), label.end()) + 1;
  for (int i = 0; i < g.size(); ++i)
    for (int c = 0; c < groups; ++c) {
      if (c == label[i]) continue;
      bool exists = false;
      for (int j = 0; j < g.size(); ++j) exists = exists || label[j] == c;
      if (!exists) continue;
      auto moved = label;
      moved[i] = c;
      if (ref_less(u[i], ref_utilities(s, g, moved)[i])) return false;
    }
  return true;
}

// Best welfare over outcomes satisfying `mode`; nullopt when none does.
inline std::optional<std::optional<std::int64_t>> ref_optimum(const ScoringVector& s, const SocialNetwork& g,
                                                               Mode mode) {
  std::optional<std::optional<std::int64_t>> best;
  std::vector<int> label(g.size(), 0);
  std::function<void(int, int)> rec = [&](int i, int groups) {
    if (i == g.size()) {
      if (!ref_stable(s, g, label, mode)) return;
      auto w = ref_welfare(s, g, label);
      if (!best || ref_less(*best, w)) best = w;
      return;
    }
    for (int c = 0; c <= groups; ++c) {
      label[i] = c;
      rec(i + 1, std::max(groups, c + 1));
    }
  };
  if (g.size() == 0) return std::optional<std::int64_t>(0);
  rec(0, 0);
  return best;
}

inline std::optional<std::int64_t> as_optional(const ExtendedValue& v) {
  return v.is_finite() ? std::optional<std::int64_t>(v.value()) : std::nullopt;
}

inline SocialNetwork random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  SocialNetwork g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline SocialNetwork path(int n) {
  SocialNetwork g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline SocialNetwork cycle(int n) {
  SocialNetwork g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline SocialNetwork clique(int n) {
  SocialNetwork g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline SocialNetwork star(int leaves) {
  SocialNetwork g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace fixtures
