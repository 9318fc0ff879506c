// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/fptdp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sdg/bounds.hpp"
#include "sdg/errors.hpp"

namespace sdg {

std::optional<int> select_sz(const ScoringVector& s, const SocialNetwork& g) {
  std::optional<int> best;
  auto take = [&](int b) { best = best ? std::min(*best, b) : b; };
  if (s.tail() == Tail::closed) take(degree_coalition_bound(s, g.max_degree()));
  if (s.at(2) < ExtendedValue(0)) {
    const int tw = std::max(0, compute_decomposition(g).decomposition.width());
    take(treewidth_coalition_bound(s, tw));
  }
  if (best) best = std::min(*best, std::max(g.size(), 1));
  return best;
}

namespace {

using Value = std::int64_t;
using Mask = std::uint64_t;
constexpr int kMaxVertices = 64;

struct Vertex {
  int label = 0;       // coalition; for a guest, the coalition it borders
  bool guest = false;  // member of a completed coalition
  Value val = 0;       // member: utility it must reach; guest: its final utility
  auto operator<=>(const Vertex&) const = default;
};

// Vertices 0..k-1 are the bag agents in bag order.
struct State {
  int k = 0;
  std::vector<Vertex> v;
  std::vector<Mask> adj;

  int size() const { return static_cast<int>(v.size()); }
  void link(int a, int b) {
    adj[a] |= Mask{1} << b;
    adj[b] |= Mask{1} << a;
  }
  Mask members(int label) const {
    Mask m = 0;
    for (int i = 0; i < size(); ++i)
      if (!v[i].guest && v[i].label == label) m |= Mask{1} << i;
    return m;
  }
  Mask named() const { return k == 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

  // New vertex order: order[new] = old. Vertices left out must have no edges.
  void reorder(const std::vector<int>& order) {
    std::vector<int> pos(v.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::vector<Vertex> nv(order.size());
    std::vector<Mask> na(order.size(), 0);
    for (size_t i = 0; i < order.size(); ++i) {
      nv[i] = v[order[i]];
      for (Mask m = adj[order[i]]; m; m &= m - 1) na[i] |= Mask{1} << pos[std::countr_zero(m)];
    }
    v = std::move(nv);
    adj = std::move(na);
  }

  void remove(Mask gone) {
    std::vector<int> keep;
    for (int i = 0; i < size(); ++i)
      if (!(gone >> i & 1)) keep.push_back(i);
    for (int i = 0; i < size(); ++i) adj[i] &= ~gone;
    reorder(keep);
  }
};

struct Record {
  State st;
  Value welfare = 0;
  std::vector<int> witness;
};

using Table = std::unordered_map<std::string, Record>;

std::vector<int> canonical_witness(const std::vector<int>& witness) {
  std::vector<int> out;
  std::unordered_map<int, int> ids;
  for (int w : witness) out.push_back(w < 0 ? -1 : ids.try_emplace(w, static_cast<int>(ids.size())).first->second);
  return out;
}

void put(std::string& out, Value x) { out.append(reinterpret_cast<const char*>(&x), sizeof x); }

std::string encode(const State& st) {
  std::string out;
  out.push_back(static_cast<char>(st.k));
  for (const auto& x : st.v) {
    out.push_back(static_cast<char>(x.label));
    out.push_back(x.guest ? 'g' : 'm');
    put(out, x.val);
  }
  for (int i = 0; i < st.size(); ++i) put(out, static_cast<Value>(st.adj[i] & ((Mask{1} << i) - 1)));
  return out;
}

// Relabels coalitions in bag order, then orders the anonymous vertices
// canonically (colour refinement, then the best permutation within colour
// classes if affordable).
std::string canonicalize(State& st, int budget) {
  std::vector<int> map(st.size() + 1, -1);
  int next = 0;
  for (int i = 0; i < st.k; ++i) {
    int& m = map[st.v[i].label];
    if (m < 0) m = next++;
  }
  for (auto& x : st.v) x.label = map[x.label];

  const int n = st.size();
  const int anon = n - st.k;
  if (anon == 0) return encode(st);
  std::vector<int> colour(n, 0);
  {
    std::vector<std::tuple<int, bool, Value, Mask, int>> keys;
    for (int i = st.k; i < n; ++i) keys.emplace_back(st.v[i].label, st.v[i].guest, st.v[i].val, st.adj[i] & st.named(), i);
    auto cmp = [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a), std::get<3>(a)) <
             std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b), std::get<3>(b));
    };
    std::sort(keys.begin(), keys.end(), cmp);
    int c = 0;
    for (size_t i = 0; i < keys.size(); ++i) {
      if (i > 0 && cmp(keys[i - 1], keys[i])) ++c;
      colour[std::get<4>(keys[i])] = c;
    }
  }
  int classes = *std::max_element(colour.begin() + st.k, colour.end()) + 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> keys;
    for (int i = st.k; i < n; ++i) {
      std::vector<int> sig{colour[i]};
      for (Mask m = st.adj[i] & ~st.named(); m; m &= m - 1) sig.push_back(colour[std::countr_zero(m)]);
      std::sort(sig.begin() + 1, sig.end());
      keys.emplace_back(std::move(sig), i);
    }
    std::sort(keys.begin(), keys.end());
    int c = 0;
    std::vector<int> next_colour(n, 0);
    for (size_t i = 0; i < keys.size(); ++i) {
      if (i > 0 && keys[i - 1].first != keys[i].first) ++c;
      next_colour[keys[i].second] = c;
    }
    colour = std::move(next_colour);
    if (c + 1 == classes) break;
    classes = c + 1;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin() + st.k, order.end(), [&](int a, int b) { return colour[a] < colour[b]; });

  // Ranges of equal colour.
  std::vector<std::pair<int, int>> ranges;
  long long perms = 1;
  for (int i = st.k; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    if (j - i > 1) {
      ranges.emplace_back(i, j);
      for (int t = 2; t <= j - i && perms <= budget; ++t) perms *= t;
    }
    i = j;
  }
  if (ranges.empty() || perms > budget) {
    st.reorder(order);
    return encode(st);
  }
  for (auto [a, b] : ranges) std::sort(order.begin() + a, order.begin() + b);
  std::string best;
  std::vector<int> best_order;
  while (true) {
    State t = st;
    t.reorder(order);
    std::string key = encode(t);
    if (best_order.empty() || key < best) {
      best = std::move(key);
      best_order = order;
    }
    size_t r = 0;
    for (; r < ranges.size(); ++r)
      if (std::next_permutation(order.begin() + ranges[r].first, order.begin() + ranges[r].second)) break;
    if (r == ranges.size()) break;
  }
  st.reorder(best_order);
  return best;
}

class Dp {
 public:
  Dp(const ScoringVector& s, const SocialNetwork& g, int sz, Mode mode, const FptOptions& opts)
      : s_(s), g_(g), sz_(sz), mode_(mode), opts_(opts), ns_(mode == Mode::ns) {}

  std::optional<SolveResult> run(const NiceTreeDecomposition& d, FptStats* stats) {
    std::vector<Table> tables(d.nodes.size());
    for (size_t x = 0; x < d.nodes.size(); ++x) {
      const auto& nd = d.nodes[x];
      Table out;
      switch (nd.kind) {
        case NodeKind::leaf: {
          Record r;
          r.witness.assign(g_.size(), -1);
          offer(out, std::move(r));
          break;
        }
        case NodeKind::introduce:
          for (auto& [key, rec] : tables[nd.children[0]]) introduce(out, rec, nd.agent, nd.bag);
          break;
        case NodeKind::forget:
          for (auto& [key, rec] : tables[nd.children[0]]) forget(out, rec, nd.agent, d.nodes[nd.children[0]].bag);
          break;
        case NodeKind::join: {
          std::unordered_map<std::string, std::vector<const Record*>> right;
          for (auto& [key, rec] : tables[nd.children[1]]) right[bag_key(rec.st)].push_back(&rec);
          for (auto& [key, rec] : tables[nd.children[0]]) {
            auto it = right.find(bag_key(rec.st));
            if (it == right.end()) continue;
            for (const Record* other : it->second) join(out, rec, *other, nd.bag);
          }
          break;
        }
      }
      for (int c : nd.children) Table().swap(tables[c]);
      if (out.size() > opts_.max_records_per_node)
        throw ResourceLimit("coalition-size DP exceeded " + std::to_string(opts_.max_records_per_node) +
                            " records at one node");
      if (stats) {
        stats->max_records = std::max(stats->max_records, out.size());
        stats->total_records += out.size();
      }
      tables[x] = std::move(out);
    }
    const Table& root = tables.back();
    if (root.empty()) return std::nullopt;
    if (root.size() != 1) throw std::logic_error("coalition-size DP: root holds more than one record");
    const Record& r = root.begin()->second;
    return SolveResult{Outcome::from_labels(r.witness), r.welfare, mode_, true, "fptdp"};
  }

 private:
  static std::string bag_key(const State& st) {
    std::string out;
    for (int i = 0; i < st.k; ++i) out.push_back(static_cast<char>(st.v[i].label));
    return out;
  }

  void offer(Table& t, Record&& r) {
    if (r.st.size() > kMaxVertices) throw ResourceLimit("coalition-size DP state exceeds 64 vertices");
    std::string key = canonicalize(r.st, opts_.canonical_budget);
    auto it = t.find(key);
    if (it == t.end()) {
      t.emplace(std::move(key), std::move(r));
      return;
    }
    Record& cur = it->second;
    if (r.welfare > cur.welfare ||
        (r.welfare == cur.welfare && canonical_witness(r.witness) < canonical_witness(cur.witness)))
      cur = std::move(r);
  }

  // BFS distances from `src` inside `within`; -1 if unreachable.
  std::vector<int> bfs(const State& st, Mask within, int src) const {
    std::vector<int> dist(st.size(), -1);
    dist[src] = 0;
    Mask seen = Mask{1} << src, frontier = seen;
    for (int d = 1; frontier; ++d) {
      Mask nxt = 0;
      for (Mask f = frontier; f; f &= f - 1) nxt |= st.adj[std::countr_zero(f)];
      nxt &= within & ~seen;
      for (Mask f = nxt; f; f &= f - 1) dist[std::countr_zero(f)] = d;
      seen |= nxt;
      frontier = nxt;
    }
    return dist;
  }

  // Utility of `src` among `others` (src excluded), walking inside others | src.
  ExtendedValue utility(const State& st, Mask others, int src) const {
    auto dist = bfs(st, others | (Mask{1} << src), src);
    ExtendedValue u = 0;
    for (Mask m = others & ~(Mask{1} << src); m; m &= m - 1) {
      int dd = dist[std::countr_zero(m)];
      if (dd < 0) return ExtendedValue::neg_inf();
      u += s_.at(dd);
    }
    return u;
  }

  static void dedupe_guests(State& st) {
    Mask gone = 0;
    for (int i = 0; i < st.size(); ++i) {
      if (!st.v[i].guest || (gone >> i & 1)) continue;
      for (int j = i + 1; j < st.size(); ++j)
        if (st.v[j].guest && !(gone >> j & 1) && st.v[j].label == st.v[i].label && st.adj[j] == st.adj[i]) {
          st.v[i].val = std::min(st.v[i].val, st.v[j].val);
          gone |= Mask{1} << j;
        }
    }
    if (gone) st.remove(gone);
  }

  void introduce(Table& out, const Record& rec, Agent a, const std::vector<Agent>& bag) {
    const int pa = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), a) - bag.begin());
    const State& cs = rec.st;
    std::vector<int> labels;
    for (int i = 0; i < cs.k; ++i) labels.push_back(cs.v[i].label);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    const int fresh = labels.empty() ? 0 : labels.back() + 1;
    labels.push_back(fresh);

    for (int l : labels) {
      if (l != fresh && std::popcount(cs.members(l)) + 1 > sz_) continue;
      Record r{cs, rec.welfare, rec.witness};
      State& st = r.st;
      // Open a slot at index pa.
      st.v.insert(st.v.begin() + pa, Vertex{l, false, 0});
      for (auto& m : st.adj) {
        Mask low = m & ((Mask{1} << pa) - 1);
        m = low | ((m >> pa) << (pa + 1));
      }
      st.adj.insert(st.adj.begin() + pa, 0);
      ++st.k;
      for (int q = 0; q < st.k; ++q)
        if (q != pa && g_.adjacent(a, bag[q]) && (ns_ || st.v[q].label == l)) st.link(pa, q);
      if (l == fresh) {
        r.witness[a] = a;
      } else {
        for (int q = 0; q < st.k; ++q)
          if (q != pa && st.v[q].label == l) {
            r.witness[a] = rec.witness[bag[q]];
            break;
          }
      }
      offer(out, std::move(r));
    }
  }

  void forget(Table& out, const Record& rec, Agent a, const std::vector<Agent>& cbag) {
    const int pf = static_cast<int>(std::lower_bound(cbag.begin(), cbag.end(), a) - cbag.begin());
    Record r = rec;
    State& st = r.st;
    const int l = st.v[pf].label;
    // Move a behind the remaining bag agents.
    std::vector<int> order;
    for (int i = 0; i < st.k; ++i)
      if (i != pf) order.push_back(i);
    order.push_back(pf);
    for (int i = st.k; i < st.size(); ++i) order.push_back(i);
    st.reorder(order);
    --st.k;

    const Mask mem = st.members(l);
    if (mem & st.named()) {
      // Every part of the coalition must still be able to connect through the bag.
      Mask left = mem;
      while (left) {
        int src = std::countr_zero(left);
        Mask comp = 0;
        auto dist = bfs(st, mem, src);
        for (int i = 0; i < st.size(); ++i)
          if (dist[i] >= 0) comp |= Mask{1} << i;
        if (!(comp & st.named())) return;
        left &= ~comp;
      }
      offer(out, std::move(r));
      return;
    }
    if (!close(st, l, r.welfare)) return;
    offer(out, std::move(r));
  }

  // Finalises coalition l, whose members are all forgotten. False if the
  // record must be discarded.
  bool close(State& st, int l, Value& welfare) {
    const Mask mem = st.members(l);
    std::vector<Value> util(st.size(), 0);
    for (Mask m = mem; m; m &= m - 1) {
      int c = std::countr_zero(m);
      ExtendedValue u = utility(st, mem, c);
      if (u.is_neg_inf()) return false;
      util[c] = u.value();
      if (mode_ != Mode::welfare && util[c] < st.v[c].val) return false;
      welfare += util[c];
    }
    Mask gone = mem;
    if (ns_) {
      for (int w = 0; w < st.size(); ++w) {
        if ((mem >> w & 1) || !(st.adj[w] & mem)) continue;
        ExtendedValue gu = utility(st, mem, w);
        if (st.v[w].guest) {
          if (gu.is_finite() && gu.value() > st.v[w].val) return false;
          gone |= Mask{1} << w;
        } else if (gu.is_finite()) {
          st.v[w].val = std::max(st.v[w].val, gu.value());
        }
      }
      for (Mask m = mem; m; m &= m - 1) {
        const int c = std::countr_zero(m);
        std::vector<int> seen;
        for (Mask nb = st.adj[c] & ~mem; nb; nb &= nb - 1) {
          const int w = std::countr_zero(nb);
          const int q = st.v[w].label;
          if (st.v[w].guest || std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
          seen.push_back(q);
          st.v.push_back(Vertex{q, true, util[c]});
          st.adj.push_back(0);
          if (st.size() > kMaxVertices) throw ResourceLimit("coalition-size DP state exceeds 64 vertices");
          const int gv = st.size() - 1;
          for (Mask e = st.adj[c] & st.members(q); e; e &= e - 1) st.link(gv, std::countr_zero(e));
        }
      }
    }
    st.remove(gone);
    dedupe_guests(st);
    return true;
  }

  void join(Table& out, const Record& ry, const Record& rz, const std::vector<Agent>& bag) {
    const State& y = ry.st;
    const State& z = rz.st;
    const int k = y.k;
    Record r;
    State& st = r.st;
    st = y;
    for (int i = 0; i < k; ++i) st.v[i].val = std::max(y.v[i].val, z.v[i].val);
    const int base = st.size();
    for (int i = k; i < z.size(); ++i) {
      st.v.push_back(z.v[i]);
      st.adj.push_back(0);
    }
    if (st.size() > kMaxVertices) throw ResourceLimit("coalition-size DP state exceeds 64 vertices");
    auto zpos = [&](int i) { return i < k ? i : base + (i - k); };
    for (int i = k; i < z.size(); ++i)
      for (Mask m = z.adj[i]; m; m &= m - 1) st.link(zpos(i), zpos(std::countr_zero(m)));
    for (int i = 0; i < k; ++i)
      if (std::popcount(st.members(st.v[i].label)) > sz_) return;
    dedupe_guests(st);
    r.welfare = ry.welfare + rz.welfare;
    r.witness = ry.witness;
    std::unordered_map<int, int> rename;
    for (Agent b : bag) rename[rz.witness[b]] = ry.witness[b];
    for (size_t v = 0; v < rz.witness.size(); ++v) {
      int id = rz.witness[v];
      if (id < 0 || r.witness[v] >= 0) continue;
      auto it = rename.find(id);
      r.witness[v] = it == rename.end() ? id : it->second;
    }
    offer(out, std::move(r));
  }

  const ScoringVector& s_;
  const SocialNetwork& g_;
  int sz_;
  Mode mode_;
  FptOptions opts_;
  bool ns_;
};

}  // namespace

std::optional<SolveResult> solve_fpt(const ScoringVector& s, const SocialNetwork& g, const NiceTreeDecomposition& d,
                                     int sz, Mode mode, const FptOptions& opts, FptStats* stats) {
  if (sz < 1) throw InvalidArgument("coalition size cap must be at least 1");
  if (d.vertex_count != g.size()) throw InvalidArgument("decomposition does not match the network");
  Dp dp(s, g, std::min(sz, std::max(g.size(), 1)), mode, opts);
  auto res = dp.run(d, stats);
  if (res) {
    auto bound = select_sz(s, g);
    res->optimal = sz >= g.size() || (bound && sz >= *bound);
  }
  return res;
}

}  // namespace sdg
