// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/twdp.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sdg/errors.hpp"

namespace sdg {

namespace {

using Value = long long;
// One entry per bag position. For a forgotten member of label L the entry at
// a position of L is the member's distance to that bag agent; at any other
// position (ns mode) it is the distance that bag agent would have to the
// member after joining L, or kFar.
using Vec = std::vector<std::uint8_t>;

constexpr std::uint8_t kFar = 0xFF;
constexpr int kClosed = -1;

struct Forgotten {
  int label;
  Vec vec;
  auto operator<=>(const Forgotten&) const = default;
};

// Aggregated stability obligation for forgotten agents: value is the max over
// the agents it stands for of (guest utility - home utility). A side is either
// an active label with the agents' distance vector to its bag members, or
// closed (utility final). The guest side closed with no coalition means the
// best closed alternative, at least 0 for going alone.
struct Constraint {
  int home;
  Vec home_vec;
  int guest;
  Vec guest_vec;
  auto operator<=>(const Constraint&) const = default;
};

struct State {
  std::vector<int> label;
  std::vector<std::uint8_t> dist;  // declared distances, k*k
  std::vector<std::pair<Forgotten, Value>> forgotten;  // class -> count
  std::vector<Value> home;  // partial utility of each bag agent (ir/ns)
  std::vector<Value> alt;   // best utility in a completed coalition (ns)
  std::vector<std::pair<Constraint, Value>> cons;

  int k() const { return static_cast<int>(label.size()); }
  std::uint8_t d(int p, int q) const { return dist[p * k() + q]; }
  void set_d(int p, int q, std::uint8_t v) { dist[p * k() + q] = dist[q * k() + p] = v; }
};

struct Record {
  State st;
  Value welfare = 0;
  std::vector<int> witness;  // coalition id (an agent of it) per processed agent, -1 otherwise
};

using Table = std::unordered_map<std::string, Record>;

void put_int(std::string& out, Value v) { out.append(reinterpret_cast<const char*>(&v), sizeof v); }

std::string prefix_key(const State& st) {
  std::string out;
  for (int l : st.label) out.push_back(static_cast<char>(l));
  out.push_back('|');
  out.append(st.dist.begin(), st.dist.end());
  return out;
}

std::string full_key(const State& st) {
  std::string out = prefix_key(st);
  out.push_back('|');
  for (const auto& [f, c] : st.forgotten) {
    out.push_back(static_cast<char>(f.label));
    out.append(f.vec.begin(), f.vec.end());
    put_int(out, c);
  }
  out.push_back('|');
  for (Value v : st.home) put_int(out, v);
  for (Value v : st.alt) put_int(out, v);
  out.push_back('|');
  for (const auto& [c, v] : st.cons) {
    out.push_back(static_cast<char>(c.home));
    out.append(c.home_vec.begin(), c.home_vec.end());
    out.push_back(static_cast<char>(c.guest));
    out.append(c.guest_vec.begin(), c.guest_vec.end());
    put_int(out, v);
  }
  return out;
}

void normalize(State& st) {
  int top = 0;
  for (int l : st.label) top = std::max(top, l + 1);
  std::vector<int> map(top, -1);
  int next = 0;
  for (int& l : st.label) {
    if (map[l] < 0) map[l] = next++;
    l = map[l];
  }
  for (auto& [f, c] : st.forgotten) f.label = map[f.label];
  for (auto& [c, v] : st.cons) {
    if (c.home != kClosed) c.home = map[c.home];
    if (c.guest != kClosed) c.guest = map[c.guest];
  }
  std::sort(st.forgotten.begin(), st.forgotten.end());
  std::vector<std::pair<Forgotten, Value>> fm;
  for (auto& e : st.forgotten) {
    if (!fm.empty() && fm.back().first == e.first) fm.back().second += e.second;
    else fm.push_back(std::move(e));
  }
  st.forgotten = std::move(fm);
  std::sort(st.cons.begin(), st.cons.end());
  std::vector<std::pair<Constraint, Value>> cm;
  for (auto& e : st.cons) {
    if (!cm.empty() && cm.back().first == e.first) cm.back().second = std::max(cm.back().second, e.second);
    else cm.push_back(std::move(e));
  }
  st.cons = std::move(cm);
}

std::vector<int> canonical(const std::vector<int>& witness) {
  std::vector<int> out;
  std::unordered_map<int, int> ids;
  for (int w : witness) {
    if (w < 0) {
      out.push_back(-1);
      continue;
    }
    auto it = ids.try_emplace(w, static_cast<int>(ids.size())).first;
    out.push_back(it->second);
  }
  return out;
}

class Dp {
 public:
  Dp(const ScoringVector& s, const SocialNetwork& g, Mode mode, const TwdpOptions& opts)
      : s_(s), g_(g), mode_(mode), opts_(opts), delta_(s.delta()),
        track_(mode != Mode::welfare), ns_(mode == Mode::ns) {}

  std::optional<SolveResult> run(const NiceTreeDecomposition& d, TwdpStats* stats) {
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
        case NodeKind::introduce: {
          const auto& child = d.nodes[nd.children[0]];
          for (auto& [key, rec] : tables[nd.children[0]]) introduce(out, rec, nd.agent, child.bag, nd.bag);
          break;
        }
        case NodeKind::forget: {
          const auto& child = d.nodes[nd.children[0]];
          for (auto& [key, rec] : tables[nd.children[0]]) forget(out, rec, nd.agent, child.bag);
          break;
        }
        case NodeKind::join: {
          std::unordered_map<std::string, std::vector<const Record*>> right;
          for (auto& [key, rec] : tables[nd.children[1]]) right[prefix_key(rec.st)].push_back(&rec);
          for (auto& [key, rec] : tables[nd.children[0]]) {
            auto it = right.find(prefix_key(rec.st));
            if (it == right.end()) continue;
            for (const Record* other : it->second) join(out, rec, *other, nd.bag);
          }
          break;
        }
      }
      for (int c : nd.children) Table().swap(tables[c]);
      if (out.size() > opts_.max_records_per_node)
        throw ResourceLimit("treewidth DP exceeded " + std::to_string(opts_.max_records_per_node) +
                            " records at one node");
      if (stats) {
        stats->records_per_node.push_back(out.size());
        stats->max_records = std::max(stats->max_records, out.size());
      }
      tables[x] = std::move(out);
    }
    const Table& root = tables.back();
    if (root.empty()) return std::nullopt;
    if (root.size() != 1) throw std::logic_error("treewidth DP: root holds more than one record");
    const Record& r = root.begin()->second;
    SolveResult res{Outcome::from_labels(r.witness), r.welfare, mode_, true, "twdp"};
    return res;
  }

 private:
  Value sc(int dist) const { return s_.scores()[dist - 1]; }

  void offer(Table& t, Record&& r) {
    normalize(r.st);
    std::string key = full_key(r.st);
    auto it = t.find(key);
    if (it == t.end()) {
      t.emplace(std::move(key), std::move(r));
      return;
    }
    Record& cur = it->second;
    if (r.welfare > cur.welfare ||
        (r.welfare == cur.welfare && canonical(r.witness) < canonical(cur.witness)))
      cur = std::move(r);
  }

  std::vector<int> members(const State& st, int l, int except = -1) const {
    std::vector<int> out;
    for (int p = 0; p < st.k(); ++p)
      if (st.label[p] == l && p != except) out.push_back(p);
    return out;
  }

  std::vector<int> labels_in(const State& st) const {
    std::vector<int> out(st.label.begin(), st.label.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Distance from bag agent x, were it to join label l, to member t of l.
  int guest_dist(const State& st, const std::vector<Agent>& bag, int x, int l, int t) const {
    int best = INT_MAX;
    for (int p = 0; p < st.k(); ++p)
      if (st.label[p] == l && g_.adjacent(bag[x], bag[p])) best = std::min(best, p == t ? 0 : int{st.d(p, t)});
    for (const auto& [f, c] : st.forgotten)
      if (f.label == l && f.vec[x] == 1) best = std::min(best, int{f.vec[t]});
    return best == INT_MAX ? INT_MAX : best + 1;
  }

  bool touches(const State& st, const std::vector<Agent>& bag, int x, int l) const {
    for (int p = 0; p < st.k(); ++p)
      if (st.label[p] == l && g_.adjacent(bag[x], bag[p])) return true;
    for (const auto& [f, c] : st.forgotten)
      if (f.label == l && f.vec[x] == 1) return true;
    return false;
  }

  // Utility bag agent x would get by joining label l; empty if -inf.
  std::optional<Value> guest_utility(const State& st, const std::vector<Agent>& bag, int x, int l) const {
    if (!touches(st, bag, x, l)) return std::nullopt;
    Value u = 0;
    for (int t : members(st, l)) {
      int dd = guest_dist(st, bag, x, l, t);
      if (dd > delta_) return std::nullopt;
      u += sc(dd);
    }
    for (const auto& [f, c] : st.forgotten) {
      if (f.label != l) continue;
      if (f.vec[x] == kFar || f.vec[x] > delta_) return std::nullopt;
      u += c * sc(f.vec[x]);
    }
    return u;
  }

  Vec guest_vector(const State& st, const std::vector<Agent>& bag, int x, int l) const {
    Vec v(st.k(), 0);
    for (int t : members(st, l)) v[t] = static_cast<std::uint8_t>(guest_dist(st, bag, x, l, t));
    return v;
  }

  // Distance entry for forgotten class f seen from bag agent x outside f's label.
  std::uint8_t outside_entry(const State& st, const std::vector<Agent>& bag, const Forgotten& f, int x) const {
    int best = INT_MAX;
    for (int p = 0; p < st.k(); ++p)
      if (st.label[p] == f.label && p != x && g_.adjacent(bag[x], bag[p])) best = std::min(best, int{f.vec[p]});
    if (best == INT_MAX || best + 1 > delta_) return kFar;
    return static_cast<std::uint8_t>(best + 1);
  }

  void introduce(Table& out, const Record& rec, Agent a, const std::vector<Agent>& cbag,
                 const std::vector<Agent>& bag) {
    const int k = static_cast<int>(cbag.size());
    const int pa = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), a) - bag.begin());
    auto np = [&](int p) { return p + (p >= pa ? 1 : 0); };

    State base;
    base.label.assign(k + 1, -1);
    for (int p = 0; p < k; ++p) base.label[np(p)] = rec.st.label[p];
    base.dist.assign((k + 1) * (k + 1), 0);
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) base.dist[np(p) * (k + 1) + np(q)] = rec.st.d(p, q);
    base.forgotten = rec.st.forgotten;
    for (auto& [f, c] : base.forgotten) f.vec.insert(f.vec.begin() + pa, 0);
    if (track_) {
      base.home = rec.st.home;
      base.home.insert(base.home.begin() + pa, 0);
      base.alt = rec.st.alt;
      if (ns_) base.alt.insert(base.alt.begin() + pa, 0);
    }
    base.cons = rec.st.cons;
    for (auto& [c, v] : base.cons) {
      if (c.home != kClosed) c.home_vec.insert(c.home_vec.begin() + pa, 0);
      if (c.guest != kClosed) c.guest_vec.insert(c.guest_vec.begin() + pa, 0);
    }

    // a opens a new coalition.
    {
      Record r{base, rec.welfare, rec.witness};
      int fresh = 0;
      for (int l : r.st.label) fresh = std::max(fresh, l + 1);
      r.st.label[pa] = fresh;
      if (ns_)
        for (auto& [f, c] : r.st.forgotten) f.vec[pa] = outside_entry(r.st, bag, f, pa);
      r.witness[a] = a;
      offer(out, std::move(r));
    }

    // a joins an existing coalition: guess its distances to the label's bag agents.
    for (int l : labels_in(rec.st)) {
      std::vector<int> mem;
      for (int p = 0; p < k + 1; ++p)
        if (p != pa && base.label[p] == l) mem.push_back(p);
      std::vector<int> guess(mem.size(), 0);
      const int cap = std::min(delta_, g_.size() - 1);
      std::function<void(size_t)> choose = [&](size_t i) {
        if (i == mem.size()) {
          join_label(out, rec, base, a, pa, l, mem, guess, bag);
          return;
        }
        const int p = mem[i];
        const bool adj = g_.adjacent(a, bag[p]);
        for (int v = adj ? 1 : 2; v <= (adj ? 1 : cap); ++v) {
          bool ok = true;
          for (size_t j = 0; j < i && ok; ++j) {
            int dpq = base.dist[p * (k + 1) + mem[j]];
            if (dpq > v + guess[j] || v > dpq + guess[j] || guess[j] > dpq + v) ok = false;
          }
          if (!ok) continue;
          guess[i] = v;
          choose(i + 1);
        }
      };
      choose(0);
    }
  }

  void join_label(Table& out, const Record& rec, const State& base, Agent a, int pa, int l,
                  const std::vector<int>& mem, const std::vector<int>& guess, const std::vector<Agent>& bag) {
    Record r{base, rec.welfare, rec.witness};
    State& st = r.st;
    st.label[pa] = l;
    Value delta = 0, ha = 0;
    for (size_t i = 0; i < mem.size(); ++i) {
      st.set_d(pa, mem[i], static_cast<std::uint8_t>(guess[i]));
      delta += 2 * sc(guess[i]);
      ha += sc(guess[i]);
      if (track_) st.home[mem[i]] += sc(guess[i]);
    }
    auto through = [&](const Vec& v) {
      int m = INT_MAX;
      for (size_t i = 0; i < mem.size(); ++i) m = std::min(m, int{v[mem[i]]} + guess[i]);
      return m;
    };
    for (auto& [f, c] : st.forgotten) {
      if (f.label == l) {
        int m = through(f.vec);
        if (m > delta_) return;
        f.vec[pa] = static_cast<std::uint8_t>(m);
        delta += 2 * c * sc(m);
        ha += c * sc(m);
        if (ns_ && m + 1 <= delta_)
          for (int x = 0; x < st.k(); ++x)
            if (st.label[x] != l && g_.adjacent(a, bag[x]) && (f.vec[x] == kFar || f.vec[x] > m + 1))
              f.vec[x] = static_cast<std::uint8_t>(m + 1);
      } else if (ns_) {
        f.vec[pa] = outside_entry(st, bag, f, pa);
      }
    }
    if (track_) st.home[pa] = ha;
    std::vector<std::pair<Constraint, Value>> cons;
    for (auto [c, v] : st.cons) {
      if (c.home == l) {
        int m = through(c.home_vec);
        if (m > delta_) return;
        c.home_vec[pa] = static_cast<std::uint8_t>(m);
        v -= sc(m);
      }
      if (c.guest == l) {
        int m = through(c.guest_vec);
        if (m > delta_) continue;  // deviation now impossible
        c.guest_vec[pa] = static_cast<std::uint8_t>(m);
        v += sc(m);
      }
      cons.emplace_back(std::move(c), v);
    }
    st.cons = std::move(cons);
    r.welfare += delta;
    r.witness[a] = rec.witness[bag[mem[0]]];
    offer(out, std::move(r));
  }

  void forget(Table& out, const Record& rec, Agent a, const std::vector<Agent>& cbag) {
    const int pf = static_cast<int>(std::lower_bound(cbag.begin(), cbag.end(), a) - cbag.begin());
    Record r = rec;
    State& st = r.st;
    const int l = st.label[pf];
    const auto mem = members(st, l, pf);
    const auto others = labels_in(st);

    auto add_con = [&](Constraint c, Value v) {
      for (auto& [k2, v2] : st.cons)
        if (k2 == c) {
          v2 = std::max(v2, v);
          return;
        }
      st.cons.emplace_back(std::move(c), v);
    };
    Vec hvec(st.k(), 0);
    for (int p : mem) hvec[p] = st.d(pf, p);
    // Obligations for a as guest of the other active coalitions.
    std::vector<std::pair<int, std::pair<Vec, Value>>> guest_of;
    if (ns_)
      for (int q : others) {
        if (q == l) continue;
        auto gu = guest_utility(st, cbag, pf, q);
        if (gu) guest_of.push_back({q, {guest_vector(st, cbag, pf, q), *gu - st.home[pf]}});
      }

    if (!mem.empty()) {
      for (int p : mem) {
        const int want = st.d(pf, p);
        if (want < 2) continue;
        bool ok = false;
        for (int q : mem)
          if (q != p && g_.adjacent(a, cbag[q]) && st.d(q, p) == want - 1) ok = true;
        for (const auto& [f, c] : st.forgotten)
          if (f.label == l && f.vec[pf] == 1 && f.vec[p] == want - 1) ok = true;
        if (!ok) return;  // declared distance has no witnessing path
      }
      Forgotten fa{l, hvec};
      if (ns_)
        for (int x = 0; x < st.k(); ++x)
          if (st.label[x] != l) {
            int gd = guest_dist(st, cbag, x, l, pf);
            fa.vec[x] = gd > delta_ ? kFar : static_cast<std::uint8_t>(gd);
          }
      if (track_) add_con(Constraint{l, hvec, kClosed, {}}, (ns_ ? st.alt[pf] : 0) - st.home[pf]);
      for (auto& [q, gv] : guest_of) add_con(Constraint{l, hvec, q, gv.first}, gv.second);
      st.forgotten.emplace_back(std::move(fa), 1);
    } else {
      // The coalition is complete.
      if (track_ && st.home[pf] < (ns_ ? st.alt[pf] : 0)) return;
      std::vector<std::pair<Constraint, Value>> cons;
      for (auto [c, v] : st.cons) {
        if (c.home == l) {
          if (c.guest == kClosed) {
            if (v > 0) return;
            continue;
          }
          c.home = kClosed;
          c.home_vec.clear();
        } else if (c.guest == l) {
          if (c.home == kClosed) {
            if (v > 0) return;
            continue;
          }
          c.guest = kClosed;
          c.guest_vec.clear();
        }
        cons.emplace_back(std::move(c), v);
      }
      st.cons = std::move(cons);
      if (ns_)
        for (int x = 0; x < st.k(); ++x)
          if (x != pf && st.label[x] != l)
            if (auto gu = guest_utility(st, cbag, x, l)) st.alt[x] = std::max(st.alt[x], *gu);
      for (auto& [q, gv] : guest_of) add_con(Constraint{kClosed, {}, q, gv.first}, gv.second);
      std::erase_if(st.forgotten, [&](const auto& e) { return e.first.label == l; });
    }

    // Drop position pf.
    const int k = st.k();
    State nx;
    for (int p = 0; p < k; ++p)
      if (p != pf) nx.label.push_back(st.label[p]);
    nx.dist.reserve((k - 1) * (k - 1));
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q)
        if (p != pf && q != pf) nx.dist.push_back(st.d(p, q));
    nx.forgotten = std::move(st.forgotten);
    for (auto& [f, c] : nx.forgotten) f.vec.erase(f.vec.begin() + pf);
    if (track_) {
      nx.home = std::move(st.home);
      nx.home.erase(nx.home.begin() + pf);
      if (ns_) {
        nx.alt = std::move(st.alt);
        nx.alt.erase(nx.alt.begin() + pf);
      }
    }
    nx.cons = std::move(st.cons);
    for (auto& [c, v] : nx.cons) {
      if (c.home != kClosed) c.home_vec.erase(c.home_vec.begin() + pf);
      if (c.guest != kClosed) c.guest_vec.erase(c.guest_vec.begin() + pf);
    }
    r.st = std::move(nx);
    offer(out, std::move(r));
  }

  void join(Table& out, const Record& ry, const Record& rz, const std::vector<Agent>& bag) {
    const State& y = ry.st;
    const State& z = rz.st;
    const int k = y.k();
    Record r;
    State& st = r.st;
    st.label = y.label;
    st.dist = y.dist;
    Value delta = 0;
    for (int p = 0; p < k; ++p)
      for (int q = p + 1; q < k; ++q)
        if (y.label[p] == y.label[q]) delta -= 2 * sc(y.d(p, q));
    if (track_) {
      st.home.resize(k);
      for (int p = 0; p < k; ++p) {
        st.home[p] = y.home[p] + z.home[p];
        for (int q = 0; q < k; ++q)
          if (q != p && y.label[q] == y.label[p]) st.home[p] -= sc(y.d(p, q));
      }
      if (ns_) {
        st.alt.resize(k);
        for (int p = 0; p < k; ++p) st.alt[p] = std::max(y.alt[p], z.alt[p]);
      }
    }
    std::vector<std::vector<int>> mem_of(k);
    for (int l : labels_in(y)) mem_of[l] = members(y, l);
    auto via_bag = [&](int l, const Vec& u, const Vec& v) {
      int m = INT_MAX;
      for (int p : mem_of[l]) m = std::min(m, int{u[p]} + int{v[p]});
      return m;
    };
    for (const auto& [fy, cy] : y.forgotten)
      for (const auto& [fz, cz] : z.forgotten) {
        if (fy.label != fz.label) continue;
        int m = via_bag(fy.label, fy.vec, fz.vec);
        if (m > delta_) return;
        delta += 2 * cy * cz * sc(m);
      }
    // Outside agents adjacent to a forgotten member on one side get shorter
    // routes to the other side's forgotten members.
    auto updated = [&](const std::vector<std::pair<Forgotten, Value>>& mine,
                       const std::vector<std::pair<Forgotten, Value>>& theirs) {
      auto res = mine;
      if (!ns_) return res;
      for (auto& [f, c] : res)
        for (int x = 0; x < k; ++x) {
          if (y.label[x] == f.label) continue;
          int best = f.vec[x] == kFar ? INT_MAX : f.vec[x];
          for (const auto& [o, oc] : theirs)
            if (o.label == f.label && o.vec[x] == 1) best = std::min(best, 1 + via_bag(f.label, f.vec, o.vec));
          if (best <= delta_) f.vec[x] = static_cast<std::uint8_t>(best);
        }
      return res;
    };
    st.forgotten = updated(y.forgotten, z.forgotten);
    for (auto& e : updated(z.forgotten, y.forgotten)) st.forgotten.push_back(std::move(e));

    auto shift = [&](const std::vector<std::pair<Constraint, Value>>& mine,
                     const std::vector<std::pair<Forgotten, Value>>& theirs) -> bool {
      for (auto [c, v] : mine) {
        bool keep = true;
        for (const auto& [o, oc] : theirs) {
          if (c.home != kClosed && o.label == c.home) {
            int m = via_bag(c.home, c.home_vec, o.vec);
            if (m > delta_) return false;
            v -= oc * sc(m);
          }
          if (c.guest != kClosed && o.label == c.guest) {
            int m = via_bag(c.guest, c.guest_vec, o.vec);
            if (m > delta_) keep = false;
            else v += oc * sc(m);
          }
        }
        if (keep) st.cons.emplace_back(std::move(c), v);
      }
      return true;
    };
    if (!shift(y.cons, z.forgotten) || !shift(z.cons, y.forgotten)) return;

    r.welfare = ry.welfare + rz.welfare + delta;
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
  Mode mode_;
  TwdpOptions opts_;
  int delta_;
  bool track_;
  bool ns_;
};

}  // namespace

std::optional<SolveResult> solve_tw(const ScoringVector& s, const SocialNetwork& g, const NiceTreeDecomposition& d,
                                    Mode mode, const TwdpOptions& opts, TwdpStats* stats) {
  if (s.tail() != Tail::closed) throw Unsupported("treewidth DP needs a closed scoring vector");
  if (d.vertex_count != g.size()) throw InvalidArgument("decomposition does not match the network");
  if (s.delta() > 254) throw Unsupported("treewidth DP supports delta up to 254");
  Dp dp(s, g, mode, opts);
  return dp.run(d, stats);
}

SolveResult solve_tw_welfare(const ScoringVector& s, const SocialNetwork& g, const NiceTreeDecomposition& d) {
  return *solve_tw(s, g, d, Mode::welfare);
}

SolveResult solve_tw_ir(const ScoringVector& s, const SocialNetwork& g, const NiceTreeDecomposition& d) {
  return *solve_tw(s, g, d, Mode::ir);
}

std::optional<SolveResult> solve_tw_ns(const ScoringVector& s, const SocialNetwork& g,
                                       const NiceTreeDecomposition& d) {
  return solve_tw(s, g, d, Mode::ns);
}

}  // namespace sdg
