// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/oracle.hpp"

#include <bit>

#include "sdg/errors.hpp"

namespace sdg {

PartitionEnumerator::PartitionEnumerator(int n) {
  if (n < 1) throw InvalidArgument("partition enumeration needs n >= 1");
  rgs_.assign(n, 0);
  prefix_max_.assign(n, 0);
}

bool PartitionEnumerator::next() {
  const int n = static_cast<int>(rgs_.size());
  for (int k = n - 1; k >= 1; --k) {
    if (rgs_[k] <= prefix_max_[k - 1]) {
      ++rgs_[k];
      prefix_max_[k] = std::max(prefix_max_[k - 1], rgs_[k]);
      for (int j = k + 1; j < n; ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = prefix_max_[k];
      }
      return true;
    }
  }
  return false;
}

std::uint64_t bell_number(int n) {
  if (n < 0) throw InvalidArgument("negative Bell index");
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> nxt{row.back()};
    for (auto v : row) nxt.push_back(nxt.back() + v);
    row = std::move(nxt);
  }
  return row.front();
}

namespace {

using Mask = std::uint32_t;

// Per-subset utilities, welfare and diameter flags for every agent subset.
struct SubsetTable {
  int n = 0;
  std::vector<ExtendedValue> welfare;
  std::vector<ExtendedValue> util;  // [mask * n + i]
  std::vector<char> ir_ok;
  std::vector<char> diam_ok;
  std::vector<Mask> adj;

  SubsetTable(const ScoringVector& s, const SocialNetwork& g) : n(g.size()) {
    const Mask full = (Mask{1} << n) - 1;
    adj.assign(n, 0);
    for (Agent v = 0; v < n; ++v)
      for (Agent w : g.neighbors(v)) adj[v] |= Mask{1} << w;
    welfare.assign(size_t{full} + 1, 0);
    util.assign((size_t{full} + 1) * n, 0);
    ir_ok.assign(size_t{full} + 1, 1);
    diam_ok.assign(size_t{full} + 1, 1);
    for (Mask mask = 1; mask <= full; ++mask) {
      ExtendedValue w = 0;
      for (Mask rest = mask; rest; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        ExtendedValue u = 0;
        Mask seen = Mask{1} << i, frontier = seen;
        int d = 0;
        while (frontier) {
          Mask nxt = 0;
          for (Mask f = frontier; f; f &= f - 1) nxt |= adj[std::countr_zero(f)];
          nxt &= mask & ~seen;
          if (!nxt) break;
          ++d;
          ExtendedValue sd = s.at(d);
          for (int c = std::popcount(nxt); c > 0; --c) u += sd;
          seen |= nxt;
          frontier = nxt;
        }
        if (seen != mask) u = ExtendedValue::neg_inf();
        if (seen != mask || (s.tail() == Tail::closed && d > s.delta())) diam_ok[mask] = 0;
        util[size_t{mask} * n + i] = u;
        if (u < ExtendedValue(0)) ir_ok[mask] = 0;
        w += u;
      }
      welfare[mask] = w;
    }
  }

  ExtendedValue u(Mask mask, int i) const { return util[size_t{mask} * n + i]; }
};

struct Best {
  bool have = false;
  ExtendedValue welfare;
  std::vector<int> rgs;
};

class Search {
 public:
  Search(const SubsetTable& t, Mode mode, bool prune)
      : t_(t), mode_(mode), prune_(prune), rgs_(t.n, 0) {}

  // Seeds the search with a fixed prefix and explores all completions.
  Best run(const std::vector<int>& prefix) {
    blocks_.clear();
    for (size_t k = 0; k < prefix.size(); ++k) {
      rgs_[k] = prefix[k];
      if (prefix[k] == static_cast<int>(blocks_.size())) blocks_.push_back(0);
      blocks_[prefix[k]] |= Mask{1} << k;
    }
    best_ = Best{};
    dfs(static_cast<int>(prefix.size()));
    return best_;
  }

 private:
  void dfs(int k) {
    if (k == t_.n) {
      evaluate();
      return;
    }
    const int nb = static_cast<int>(blocks_.size());
    for (int b = 0; b <= nb; ++b) {
      rgs_[k] = b;
      if (b == nb) blocks_.push_back(0);
      blocks_[b] |= Mask{1} << k;
      dfs(k + 1);
      blocks_[b] &= ~(Mask{1} << k);
      if (b == nb) blocks_.pop_back();
    }
  }

  void evaluate() {
    ExtendedValue w = 0;
    for (Mask b : blocks_) {
      if (prune_ && !t_.diam_ok[b]) return;
      w += t_.welfare[b];
    }
    if (best_.have && !(w > best_.welfare)) return;
    if (mode_ != Mode::welfare) {
      for (Mask b : blocks_)
        if (!t_.ir_ok[b]) return;
    }
    if (mode_ == Mode::ns && !nash_stable()) return;
    best_.have = true;
    best_.welfare = w;
    best_.rgs = rgs_;
  }

  bool nash_stable() const {
    for (int i = 0; i < t_.n; ++i) {
      Mask own = blocks_[rgs_[i]];
      ExtendedValue u = t_.u(own, i);
      for (Mask b : blocks_) {
        if (b == own || !(t_.adj[i] & b)) continue;
        if (t_.u(b | (Mask{1} << i), i) > u) return false;
      }
    }
    return true;
  }

  const SubsetTable& t_;
  Mode mode_;
  bool prune_;
  std::vector<int> rgs_;
  std::vector<Mask> blocks_;
  Best best_;
};

void prefixes(int len, std::vector<int>& cur, int nb, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= nb; ++b) {
    cur.push_back(b);
    prefixes(len, cur, std::max(nb, b + 1), out);
    cur.pop_back();
  }
}

// Picks the higher welfare; on ties keeps `acc`, which precedes `cand` in
// restricted-growth order.
void merge(Best& acc, const Best& cand) {
  if (!cand.have) return;
  if (!acc.have || cand.welfare > acc.welfare) acc = cand;
}

}  // namespace

std::optional<SolveResult> brute_force_solve(const ScoringVector& s, const SocialNetwork& g,
                                             Mode mode, const OracleOptions& opts) {
  const int n = g.size();
  constexpr int kHardCap = 16;  // subset tables are 2^n * n entries
  if (n > opts.max_agents || n > kHardCap)
    throw ResourceLimit("brute force limited to " + std::to_string(std::min(opts.max_agents, kHardCap)) +
                        " agents, instance has " + std::to_string(n));
  if (n == 0) return SolveResult{Outcome({}, 0), 0, mode, true, "brute"};
  SubsetTable table(s, g);
  const bool prune = opts.prune_diameter && mode == Mode::welfare && s.tail() == Tail::closed;

  Best best;
  if (!opts.parallel) {
    Search search(table, mode, prune);
    best = search.run({0});
  } else {
    std::vector<std::vector<int>> tasks;
    std::vector<int> cur{0};
    prefixes(std::min(n, 7), cur, 1, tasks);
    std::vector<Best> found(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < static_cast<long long>(tasks.size()); ++k) {
      Search search(table, mode, prune);
      found[k] = search.run(tasks[k]);
    }
    for (const auto& f : found) merge(best, f);
  }
  if (!best.have) return std::nullopt;
  return SolveResult{Outcome::from_labels(best.rgs), best.welfare, mode, true, "brute"};
}

bool decide_welfare_at_least(const ScoringVector& s, const SocialNetwork& g, std::int64_t b,
                             Mode mode, const OracleOptions& opts) {
  auto r = brute_force_solve(s, g, mode, opts);
  return r && r->welfare >= ExtendedValue(b);
}

}  // namespace sdg
