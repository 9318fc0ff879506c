// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdg {

using Agent = int;

// An integer or negative infinity. Negative infinity absorbs under addition
// and compares below every finite value.
class ExtendedValue {
 public:
  constexpr ExtendedValue() = default;
  constexpr ExtendedValue(std::int64_t v) : finite_(true), value_(v) {}  // NOLINT

  static constexpr ExtendedValue neg_inf() {
    ExtendedValue e;
    e.finite_ = false;
    e.value_ = 0;
    return e;
  }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_neg_inf() const { return !finite_; }
  // Throws InvalidArgument on negative infinity.
  std::int64_t value() const;

  constexpr ExtendedValue operator+(ExtendedValue o) const {
    if (!finite_ || !o.finite_) return neg_inf();
    return ExtendedValue(value_ + o.value_);
  }
  constexpr ExtendedValue& operator+=(ExtendedValue o) { return *this = *this + o; }
  // Finite operands only; used for utility gains.
  ExtendedValue operator-(ExtendedValue o) const;

  constexpr bool operator==(const ExtendedValue& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const ExtendedValue& o) const {
    if (!finite_ || !o.finite_) return finite_ <=> o.finite_;
    return value_ <=> o.value_;
  }

  std::string to_string() const;

 private:
  bool finite_ = true;
  std::int64_t value_ = 0;
};

enum class Tail { closed, open };

std::string_view to_string(Tail t);
Tail parse_tail(std::string_view text);

// Non-increasing scores s_1..s_delta. Distances beyond delta score -inf
// (closed tail) or s_delta (open tail).
class ScoringVector {
 public:
  ScoringVector(std::vector<int> scores, Tail tail);
  // "1,0,-1"
  static ScoringVector parse(std::string_view text, Tail tail);

  const std::vector<int>& scores() const { return scores_; }
  Tail tail() const { return tail_; }
  int delta() const { return static_cast<int>(scores_.size()); }
  int s1() const { return scores_.front(); }
  int last() const { return scores_.back(); }

  // d >= 1.
  ExtendedValue at(int d) const;
  std::string to_string() const;

  bool operator==(const ScoringVector&) const = default;

 private:
  std::vector<int> scores_;
  Tail tail_;
};

// d >= 1 or -inf (unreachable, which scores -inf).
ExtendedValue score_at(const ScoringVector& s, ExtendedValue d);

// Simple undirected graph on agents 0..n-1.
class SocialNetwork {
 public:
  SocialNetwork() = default;
  explicit SocialNetwork(int n);
  SocialNetwork(int n, const std::vector<std::pair<Agent, Agent>>& edges);

  int size() const { return n_; }
  int edge_count() const { return m_; }
  bool adjacent(Agent u, Agent v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
  const std::vector<Agent>& neighbors(Agent v) const { return nbrs_[v]; }
  int degree(Agent v) const { return static_cast<int>(nbrs_[v].size()); }
  int max_degree() const;
  std::vector<std::pair<Agent, Agent>> edges() const;

  // Throws InvalidArgument on self-loops, duplicates and out-of-range agents.
  void add_edge(Agent u, Agent v);

  // Subgraph induced by `agents`, relabelled 0..k-1 in the given order.
  SocialNetwork induced(const std::vector<Agent>& agents) const;
  // Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<Agent>> components() const;
  SocialNetwork complement() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<Agent>> nbrs_;
};

// Partition of all agents into coalitions, kept in canonical form:
// coalitions ordered by smallest member, members ascending.
class Outcome {
 public:
  Outcome() = default;
  // Throws InvalidArgument unless `coalitions` partitions 0..n-1.
  Outcome(std::vector<std::vector<Agent>> coalitions, int n);
  // label[i] is any coalition id of agent i.
  static Outcome from_labels(const std::vector<int>& label);
  static Outcome singletons(int n);
  static Outcome grand(int n);

  int agent_count() const { return static_cast<int>(index_.size()); }
  int coalition_count() const { return static_cast<int>(coalitions_.size()); }
  const std::vector<std::vector<Agent>>& coalitions() const { return coalitions_; }
  const std::vector<Agent>& coalition(int idx) const { return coalitions_[idx]; }
  // Canonical index of the coalition holding `agent`.
  int index_of(Agent agent) const { return index_[agent]; }
  const std::vector<Agent>& coalition_of(Agent agent) const { return coalitions_[index_[agent]]; }
  // Restricted growth string: canonical coalition index per agent.
  const std::vector<int>& labels() const { return index_; }

  bool operator==(const Outcome& o) const { return index_ == o.index_; }
  // Lexicographic on restricted growth strings.
  bool operator<(const Outcome& o) const { return index_ < o.index_; }

  std::string to_string() const;

 private:
  std::vector<std::vector<Agent>> coalitions_;
  std::vector<int> index_;
};

// Sentinel for "no path" in the integer distance helpers below.
inline constexpr int kUnreachable = -1;

// BFS distances from `source` inside the subgraph induced by agents with
// member[v] != 0. Entries outside the subgraph or unreachable are kUnreachable.
std::vector<int> distances_within(const SocialNetwork& g, const std::vector<char>& member,
                                  Agent source);

ExtendedValue coalition_distance(const SocialNetwork& g, const std::vector<Agent>& coalition,
                                 Agent i, Agent j);
ExtendedValue coalition_diameter(const SocialNetwork& g, const std::vector<Agent>& coalition);

// Utility of agent i if its coalition were exactly `coalition` (i must be in it).
ExtendedValue utility_in(const ScoringVector& s, const SocialNetwork& g,
                         const std::vector<Agent>& coalition, Agent i);
// Sum of member utilities of a single coalition.
ExtendedValue coalition_welfare(const ScoringVector& s, const SocialNetwork& g,
                                const std::vector<Agent>& coalition);

ExtendedValue agent_utility(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi,
                            Agent i);
ExtendedValue social_welfare(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi);

}  // namespace sdg
