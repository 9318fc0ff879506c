// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/core.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>

#include "sdg/errors.hpp"

namespace sdg {

std::int64_t ExtendedValue::value() const {
  if (!finite_) throw InvalidArgument("value() of -inf");
  return value_;
}

ExtendedValue ExtendedValue::operator-(ExtendedValue o) const {
  if (!finite_ || !o.finite_) throw InvalidArgument("difference involving -inf");
  return ExtendedValue(value_ - o.value_);
}

std::string ExtendedValue::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("-inf");
}

std::string_view to_string(Tail t) { return t == Tail::closed ? "closed" : "open"; }

Tail parse_tail(std::string_view text) {
  if (text == "closed") return Tail::closed;
  if (text == "open") return Tail::open;
  throw InvalidArgument("tail must be 'closed' or 'open', got '" + std::string(text) + "'");
}

ScoringVector::ScoringVector(std::vector<int> scores, Tail tail)
    : scores_(std::move(scores)), tail_(tail) {
  if (scores_.empty()) throw InvalidArgument("scoring vector needs at least one entry");
  for (size_t a = 1; a < scores_.size(); ++a)
    if (scores_[a] > scores_[a - 1])
      throw InvalidArgument("scoring vector must be non-increasing");
}

ScoringVector ScoringVector::parse(std::string_view text, Tail tail) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw InvalidArgument("bad score '" + std::string(tok) + "' in '" + std::string(text) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return ScoringVector(std::move(out), tail);
}

ExtendedValue ScoringVector::at(int d) const {
  if (d < 1) throw InvalidArgument("score distance must be >= 1, got " + std::to_string(d));
  if (d <= delta()) return scores_[d - 1];
  if (tail_ == Tail::closed) return ExtendedValue::neg_inf();
  return scores_.back();
}

std::string ScoringVector::to_string() const {
  std::string out;
  for (size_t a = 0; a < scores_.size(); ++a) {
    if (a) out += ',';
    out += std::to_string(scores_[a]);
  }
  return out;
}

ExtendedValue score_at(const ScoringVector& s, ExtendedValue d) {
  if (d.is_neg_inf()) return ExtendedValue::neg_inf();
  std::int64_t v = d.value();
  if (v < 1) throw InvalidArgument("score distance must be >= 1, got " + std::to_string(v));
  if (v > s.delta()) return s.at(s.delta() + 1);
  return s.at(static_cast<int>(v));
}

SocialNetwork::SocialNetwork(int n) : n_(n) {
  if (n < 0) throw InvalidArgument("negative agent count");
  adj_.assign(static_cast<size_t>(n) * n, 0);
  nbrs_.assign(n, {});
}

SocialNetwork::SocialNetwork(int n, const std::vector<std::pair<Agent, Agent>>& edges)
    : SocialNetwork(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SocialNetwork::add_edge(Agent u, Agent v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range");
  if (u == v) throw InvalidArgument("self-loop on agent " + std::to_string(u));
  if (adjacent(u, v))
    throw InvalidArgument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  adj_[static_cast<size_t>(u) * n_ + v] = adj_[static_cast<size_t>(v) * n_ + u] = 1;
  auto ins = [](std::vector<Agent>& l, Agent x) { l.insert(std::upper_bound(l.begin(), l.end(), x), x); };
  ins(nbrs_[u], v);
  ins(nbrs_[v], u);
  ++m_;
}

int SocialNetwork::max_degree() const {
  int d = 0;
  for (const auto& l : nbrs_) d = std::max(d, static_cast<int>(l.size()));
  return d;
}

std::vector<std::pair<Agent, Agent>> SocialNetwork::edges() const {
  std::vector<std::pair<Agent, Agent>> out;
  for (Agent u = 0; u < n_; ++u)
    for (Agent v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

SocialNetwork SocialNetwork::induced(const std::vector<Agent>& agents) const {
  SocialNetwork h(static_cast<int>(agents.size()));
  for (size_t a = 0; a < agents.size(); ++a)
    for (size_t b = a + 1; b < agents.size(); ++b)
      if (adjacent(agents[a], agents[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

std::vector<std::vector<Agent>> SocialNetwork::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<Agent>> out;
  for (Agent r = 0; r < n_; ++r) {
    if (comp[r] >= 0) continue;
    std::vector<Agent> cur{r};
    comp[r] = static_cast<int>(out.size());
    for (size_t h = 0; h < cur.size(); ++h)
      for (Agent w : nbrs_[cur[h]])
        if (comp[w] < 0) {
          comp[w] = comp[r];
          cur.push_back(w);
        }
    std::sort(cur.begin(), cur.end());
    out.push_back(std::move(cur));
  }
  return out;
}

SocialNetwork SocialNetwork::complement() const {
  SocialNetwork h(n_);
  for (Agent u = 0; u < n_; ++u)
    for (Agent v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Outcome::Outcome(std::vector<std::vector<Agent>> coalitions, int n) {
  index_.assign(n, -1);
  for (auto& c : coalitions) {
    if (c.empty()) throw InvalidArgument("empty coalition");
    std::sort(c.begin(), c.end());
    for (Agent a : c) {
      if (a < 0 || a >= n) throw InvalidArgument("agent " + std::to_string(a) + " out of range");
      if (index_[a] >= 0)
        throw InvalidArgument("agent " + std::to_string(a) + " appears in two coalitions");
      index_[a] = 0;
    }
  }
  for (Agent a = 0; a < n; ++a)
    if (index_[a] < 0) throw InvalidArgument("agent " + std::to_string(a) + " is in no coalition");
  std::sort(coalitions.begin(), coalitions.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  coalitions_ = std::move(coalitions);
  for (size_t c = 0; c < coalitions_.size(); ++c)
    for (Agent a : coalitions_[c]) index_[a] = static_cast<int>(c);
}

Outcome Outcome::from_labels(const std::vector<int>& label) {
  std::vector<std::vector<Agent>> groups;
  std::vector<std::pair<int, int>> seen;  // label -> group
  for (Agent a = 0; a < static_cast<int>(label.size()); ++a) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](auto& p) { return p.first == label[a]; });
    if (it == seen.end()) {
      seen.emplace_back(label[a], static_cast<int>(groups.size()));
      groups.push_back({a});
    } else {
      groups[it->second].push_back(a);
    }
  }
  return Outcome(std::move(groups), static_cast<int>(label.size()));
}

Outcome Outcome::singletons(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  return from_labels(l);
}

Outcome Outcome::grand(int n) {
  if (n == 0) return Outcome({}, 0);
  return from_labels(std::vector<int>(n, 0));
}

std::string Outcome::to_string() const {
  std::string out;
  for (const auto& c : coalitions_) {
    out += '{';
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k]);
    }
    out += '}';
  }
  return out;
}

std::vector<int> distances_within(const SocialNetwork& g, const std::vector<char>& member,
                                  Agent source) {
  std::vector<int> dist(g.size(), kUnreachable);
  if (!member[source]) return dist;
  std::deque<Agent> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    Agent u = q.front();
    q.pop_front();
    for (Agent w : g.neighbors(u))
      if (member[w] && dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

namespace {

std::vector<char> membership(const SocialNetwork& g, const std::vector<Agent>& c) {
  std::vector<char> m(g.size(), 0);
  for (Agent a : c) {
    if (a < 0 || a >= g.size()) throw InvalidArgument("agent " + std::to_string(a) + " out of range");
    m[a] = 1;
  }
  return m;
}

ExtendedValue to_ext(int d) { return d == kUnreachable ? ExtendedValue::neg_inf() : ExtendedValue(d); }

}  // namespace

ExtendedValue coalition_distance(const SocialNetwork& g, const std::vector<Agent>& coalition,
                                 Agent i, Agent j) {
  auto m = membership(g, coalition);
  if (i < 0 || i >= g.size() || !m[i] || j < 0 || j >= g.size() || !m[j])
    throw InvalidArgument("distance endpoints must lie in the coalition");
  return to_ext(distances_within(g, m, i)[j]);
}

ExtendedValue coalition_diameter(const SocialNetwork& g, const std::vector<Agent>& coalition) {
  if (coalition.empty()) throw InvalidArgument("diameter of empty coalition");
  auto m = membership(g, coalition);
  int best = 0;
  for (Agent i : coalition) {
    auto d = distances_within(g, m, i);
    for (Agent j : coalition) {
      if (d[j] == kUnreachable) return ExtendedValue::neg_inf();
      best = std::max(best, d[j]);
    }
  }
  return best;
}

ExtendedValue utility_in(const ScoringVector& s, const SocialNetwork& g,
                         const std::vector<Agent>& coalition, Agent i) {
  auto m = membership(g, coalition);
  if (i < 0 || i >= g.size() || !m[i]) throw InvalidArgument("agent not in coalition");
  auto d = distances_within(g, m, i);
  ExtendedValue u = 0;
  for (Agent j : coalition)
    if (j != i) u += score_at(s, to_ext(d[j]));
  return u;
}

ExtendedValue coalition_welfare(const ScoringVector& s, const SocialNetwork& g,
                                const std::vector<Agent>& coalition) {
  ExtendedValue w = 0;
  for (Agent i : coalition) w += utility_in(s, g, coalition, i);
  return w;
}

ExtendedValue agent_utility(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi,
                            Agent i) {
  if (pi.agent_count() != g.size()) throw InvalidArgument("outcome size does not match network");
  return utility_in(s, g, pi.coalition_of(i), i);
}

ExtendedValue social_welfare(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi) {
  if (pi.agent_count() != g.size()) throw InvalidArgument("outcome size does not match network");
  ExtendedValue w = 0;
  for (const auto& c : pi.coalitions()) w += coalition_welfare(s, g, c);
  return w;
}

}  // namespace sdg
