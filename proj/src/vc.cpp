// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/vc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sdg/errors.hpp"
#include "sdg/oracle.hpp"

namespace sdg {

namespace {

using Value = std::int64_t;

struct CoverSearch {
  const SocialNetwork& g;
  long long budget;
  long long nodes = 0;
  std::vector<char> in;
  std::vector<Agent> best;
  bool have = false;

  int uncovered_degree(Agent v) const {
    int d = 0;
    for (Agent w : g.neighbors(v))
      if (!in[w]) ++d;
    return d;
  }

  void run(int size) {
    if (++nodes > budget) throw ResourceLimit("vertex cover search exceeded its node budget");
    if (have && size >= static_cast<int>(best.size())) return;
    Agent pick = -1;
    int pick_deg = 0, edges = 0;
    for (Agent v = 0; v < g.size(); ++v) {
      if (in[v]) continue;
      int d = uncovered_degree(v);
      edges += d;
      if (d > pick_deg) pick = v, pick_deg = d;
    }
    edges /= 2;
    if (pick < 0) {
      best.clear();
      for (Agent v = 0; v < g.size(); ++v)
        if (in[v]) best.push_back(v);
      have = true;
      return;
    }
    if (have && size + (edges + pick_deg - 1) / pick_deg >= static_cast<int>(best.size())) return;
    // A degree-one vertex never needs to be in the cover.
    for (Agent v = 0; v < g.size(); ++v) {
      if (in[v] || uncovered_degree(v) != 1) continue;
      for (Agent w : g.neighbors(v))
        if (!in[w]) {
          in[w] = 1;
          run(size + 1);
          in[w] = 0;
          return;
        }
    }
    in[pick] = 1;
    run(size + 1);
    in[pick] = 0;
    std::vector<Agent> added;
    for (Agent w : g.neighbors(pick))
      if (!in[w]) {
        in[w] = 1;
        added.push_back(w);
      }
    run(size + static_cast<int>(added.size()));
    for (Agent w : added) in[w] = 0;
  }
};

// Shortest paths inside one coalition of a structure: cover members first,
// then one representative per declared class.
struct Quotient {
  std::vector<Agent> cover;
  std::vector<int> classes;
  std::vector<std::vector<char>> adj;
  std::vector<std::vector<int>> dist;  // -1 unreachable

  int size() const { return static_cast<int>(cover.size() + classes.size()); }
};

std::vector<std::vector<char>> quotient_adjacency(const SocialNetwork& g, const std::vector<NeighborhoodClass>& cls,
                                                  const std::vector<Agent>& cover, const std::vector<int>& declared) {
  const int k = static_cast<int>(cover.size());
  const int n = k + static_cast<int>(declared.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) adj[i][j] = g.adjacent(cover[i], cover[j]);
  for (size_t c = 0; c < declared.size(); ++c) {
    const auto& w = cls[declared[c]].cover;
    for (int i = 0; i < k; ++i)
      if (std::binary_search(w.begin(), w.end(), cover[i])) adj[k + c][i] = adj[i][k + c] = 1;
  }
  return adj;
}

std::vector<int> bfs(const std::vector<std::vector<char>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::vector<int> queue{src};
  dist[src] = 0;
  for (size_t h = 0; h < queue.size(); ++h)
    for (size_t w = 0; w < adj.size(); ++w)
      if (adj[queue[h]][w] && dist[w] < 0) {
        dist[w] = dist[queue[h]] + 1;
        queue.push_back(static_cast<int>(w));
      }
  return dist;
}

Quotient make_quotient(const SocialNetwork& g, const std::vector<NeighborhoodClass>& cls,
                       const std::vector<Agent>& cover, const std::vector<int>& declared) {
  Quotient q{cover, declared, quotient_adjacency(g, cls, cover, declared), {}};
  for (int i = 0; i < q.size(); ++i) q.dist.push_back(bfs(q.adj, i));
  return q;
}

bool connected(const Quotient& q) {
  for (int d : q.dist[0])
    if (d < 0) return false;
  return true;
}

}  // namespace

std::vector<Agent> compute_vertex_cover(const SocialNetwork& g, long long node_budget) {
  CoverSearch search{g, node_budget, 0, {}, {}, false};
  search.in.assign(g.size(), 0);
  search.run(0);
  return search.best;
}

std::vector<NeighborhoodClass> neighborhood_classes(const SocialNetwork& g, const std::vector<Agent>& cover) {
  std::vector<char> in(g.size(), 0);
  for (Agent u : cover) in[u] = 1;
  std::map<std::vector<Agent>, std::vector<Agent>> by_nbhd;
  for (Agent v = 0; v < g.size(); ++v) {
    if (in[v] || g.degree(v) == 0) continue;
    for (Agent w : g.neighbors(v))
      if (!in[w]) throw InvalidArgument("not a vertex cover: edge " + std::to_string(v) + "-" + std::to_string(w));
    by_nbhd[g.neighbors(v)].push_back(v);
  }
  std::vector<NeighborhoodClass> out;
  for (auto& [w, agents] : by_nbhd) out.push_back({w, agents});
  return out;
}

void for_each_structure(const SocialNetwork& g, const std::vector<Agent>& cover,
                        const std::vector<NeighborhoodClass>& classes,
                        const std::function<void(const CoverStructure&)>& visit) {
  const int k = static_cast<int>(cover.size());
  if (k == 0) {
    visit(CoverStructure{});
    return;
  }
  PartitionEnumerator parts(k);
  do {
    const auto& rgs = parts.current();
    const int m = *std::max_element(rgs.begin(), rgs.end()) + 1;
    CoverStructure st;
    st.parts.assign(m, {});
    for (int i = 0; i < k; ++i) st.parts[rgs[i]].push_back(cover[i]);
    // Connected declaration sets per part.
    std::vector<std::vector<std::vector<int>>> options(m);
    bool dead = false;
    for (int p = 0; p < m && !dead; ++p) {
      std::vector<int> eligible;
      for (size_t c = 0; c < classes.size(); ++c) {
        const auto& w = classes[c].cover;
        for (Agent u : st.parts[p])
          if (std::binary_search(w.begin(), w.end(), u)) {
            eligible.push_back(static_cast<int>(c));
            break;
          }
      }
      if (eligible.size() > 24) throw ResourceLimit("too many neighbourhood classes for one cover part");
      for (std::uint32_t sub = 0; sub < (1u << eligible.size()); ++sub) {
        std::vector<int> declared;
        for (size_t b = 0; b < eligible.size(); ++b)
          if (sub >> b & 1) declared.push_back(eligible[b]);
        if (connected(make_quotient(g, classes, st.parts[p], declared))) options[p].push_back(std::move(declared));
      }
      dead = options[p].empty();
    }
    if (dead) continue;
    std::vector<size_t> pick(m, 0);
    st.declared.assign(m, {});
    while (true) {
      for (int p = 0; p < m; ++p) st.declared[p] = options[p][pick[p]];
      visit(st);
      int p = 0;
      for (; p < m; ++p) {
        if (++pick[p] < options[p].size()) break;
        pick[p] = 0;
      }
      if (p == m) break;
    }
  } while (parts.next());
}

std::vector<CoverStructure> enumerate_structures(const SocialNetwork& g, const std::vector<Agent>& cover) {
  std::vector<CoverStructure> out;
  for_each_structure(g, cover, neighborhood_classes(g, cover), [&](const CoverStructure& st) { out.push_back(st); });
  return out;
}

std::int64_t QuadraticProgram::objective(const std::vector<int>& x) const {
  Value total = constant;
  for (size_t i = 0; i < x.size(); ++i) {
    total += linear[i] * x[i];
    for (size_t j = i; j < x.size(); ++j) total += quadratic[i][j] * x[i] * x[j];
  }
  return total;
}

bool QuadraticProgram::feasible(const std::vector<int>& x) const {
  std::vector<int> used(class_size.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1 || x[i] > var_upper[i]) return false;
    used[var_class[i]] += x[i];
  }
  for (size_t c = 0; c < used.size(); ++c)
    if (used[c] > class_size[c]) return false;
  for (const auto& con : constraints) {
    if (con.when_slack >= 0 && used[con.when_slack] == class_size[con.when_slack]) continue;
    Value v = con.constant;
    for (size_t i = 0; i < x.size(); ++i) v += con.coef[i] * x[i];
    if (v < 0) return false;
  }
  return true;
}

std::optional<QpSolution> solve_qp(const QuadraticProgram& qp, long long node_budget) {
  const int nv = static_cast<int>(qp.var_class.size());
  std::vector<int> need(qp.class_size.size(), 0);  // variables of each class still unassigned
  for (int c : qp.var_class) ++need[c];
  std::vector<int> used(qp.class_size.size(), 0);
  for (size_t c = 0; c < need.size(); ++c)
    if (need[c] > qp.class_size[c]) return std::nullopt;
  std::vector<int> x(nv, 0);
  std::optional<QpSolution> best;
  long long nodes = 0;
  auto dfs = [&](auto&& self, int i) -> void {
    if (++nodes > node_budget) throw ResourceLimit("quadratic program search exceeded its node budget");
    if (i == nv) {
      if (!qp.feasible(x)) return;
      Value obj = qp.objective(x);
      if (!best || obj > best->objective) best = QpSolution{x, obj};
      return;
    }
    const int c = qp.var_class[i];
    --need[c];
    const int room = qp.class_size[c] - used[c] - need[c];
    for (int v = 1; v <= std::min(room, qp.var_upper[i]); ++v) {
      x[i] = v;
      used[c] += v;
      self(self, i + 1);
      used[c] -= v;
    }
    ++need[c];
  };
  dfs(dfs, 0);
  return best;
}

namespace {

// A utility as constant + coef.x over one part's declared classes, or -inf.
struct LocalExpr {
  bool finite = true;
  Value constant = 0;
  std::vector<Value> coef;
};

struct PartModel {
  bool admissible = true;
  Quotient q;
  std::vector<LocalExpr> cover_util;  // per cover member
  std::vector<LocalExpr> class_util;  // per declared class, without the same-class term
  // Utility of an outsider joining this part; empty when it has no
  // neighbour here or would be at -inf.
  std::vector<std::optional<LocalExpr>> join_cover;  // indexed by agent
  std::vector<std::optional<LocalExpr>> join_class;  // indexed by class
};

class QpBuilder {
 public:
  QpBuilder(const ScoringVector& s, const SocialNetwork& g, const std::vector<NeighborhoodClass>& classes, Mode mode)
      : s_(s), g_(g), classes_(classes), mode_(mode) {
    for (const auto& c : classes)
      for (Agent u : c.cover) cover_.push_back(u);
    std::sort(cover_.begin(), cover_.end());
    cover_.erase(std::unique(cover_.begin(), cover_.end()), cover_.end());
  }

  std::optional<QuadraticProgram> build(const CoverStructure& st) {
    const int m = static_cast<int>(st.parts.size());
    std::vector<const PartModel*> model(m);
    for (int p = 0; p < m; ++p) {
      model[p] = &part(st.parts[p], st.declared[p]);
      if (!model[p]->admissible) return std::nullopt;
    }
    QuadraticProgram qp;
    std::vector<std::vector<int>> var(m);
    for (int p = 0; p < m; ++p)
      for (int c : st.declared[p]) {
        var[p].push_back(static_cast<int>(qp.var_class.size()));
        qp.var_class.push_back(c);
        qp.var_upper.push_back(static_cast<int>(classes_[c].agents.size()));
      }
    const int nv = static_cast<int>(qp.var_class.size());
    for (const auto& c : classes_) qp.class_size.push_back(static_cast<int>(c.agents.size()));
    qp.linear.assign(nv, 0);
    qp.quadratic.assign(nv, std::vector<Value>(nv, 0));
    const ExtendedValue s2 = s_.at(2);

    for (int p = 0; p < m; ++p) {
      for (const auto& e : model[p]->cover_util) {
        qp.constant += e.constant;
        for (size_t c = 0; c < e.coef.size(); ++c) qp.linear[var[p][c]] += e.coef[c];
      }
      for (size_t c = 0; c < st.declared[p].size(); ++c) {
        const int xv = var[p][c];
        const auto& e = model[p]->class_util[c];
        qp.linear[xv] += e.constant;
        for (size_t c2 = 0; c2 < e.coef.size(); ++c2) {
          const int v = var[p][c2];
          qp.quadratic[std::min(v, xv)][std::max(v, xv)] += e.coef[c2];
        }
        // Same-class pairs sit at distance 2: (x - 1) * s(2) each.
        if (s2.is_neg_inf()) {
          qp.var_upper[xv] = 1;
        } else {
          qp.quadratic[xv][xv] += s2.value();
          qp.linear[xv] -= s2.value();
        }
      }
    }
    if (mode_ == Mode::welfare) return qp;

    // Utility of an agent of declared class c in part p.
    auto own_class = [&](int p, size_t c) {
      const auto& e = model[p]->class_util[c];
      QuadraticProgram::Constraint con{e.constant, std::vector<Value>(nv, 0), -1};
      for (size_t c2 = 0; c2 < e.coef.size(); ++c2) con.coef[var[p][c2]] += e.coef[c2];
      if (s2.is_finite()) {
        con.constant -= s2.value();
        con.coef[var[p][c]] += s2.value();
      }
      return con;
    };
    auto own_cover = [&](int p, size_t i) {
      const auto& e = model[p]->cover_util[i];
      QuadraticProgram::Constraint con{e.constant, std::vector<Value>(nv, 0), -1};
      for (size_t c = 0; c < e.coef.size(); ++c) con.coef[var[p][c]] += e.coef[c];
      return con;
    };
    auto minus = [&](QuadraticProgram::Constraint con, int p2, const LocalExpr& dev) {
      con.constant -= dev.constant;
      for (size_t c = 0; c < dev.coef.size(); ++c) con.coef[var[p2][c]] -= dev.coef[c];
      return con;
    };

    for (int p = 0; p < m; ++p) {
      for (size_t i = 0; i < st.parts[p].size(); ++i) qp.constraints.push_back(own_cover(p, i));
      for (size_t c = 0; c < st.declared[p].size(); ++c) qp.constraints.push_back(own_class(p, c));
    }
    if (mode_ == Mode::ir) return qp;

    for (int p = 0; p < m; ++p) {
      for (size_t i = 0; i < st.parts[p].size(); ++i) {
        const Agent u = st.parts[p][i];
        const auto own = own_cover(p, i);
        for (int p2 = 0; p2 < m; ++p2)
          if (p2 != p && model[p2]->join_cover[u]) qp.constraints.push_back(minus(own, p2, *model[p2]->join_cover[u]));
        // Joining a leftover singleton of an adjacent class.
        for (size_t c = 0; c < classes_.size(); ++c)
          if (std::binary_search(classes_[c].cover.begin(), classes_[c].cover.end(), u)) {
            auto con = own;
            con.constant -= s_.s1();
            con.when_slack = static_cast<int>(c);
            qp.constraints.push_back(std::move(con));
          }
      }
      for (size_t c = 0; c < st.declared[p].size(); ++c) {
        const auto own = own_class(p, c);
        const int cls = st.declared[p][c];
        for (int p2 = 0; p2 < m; ++p2)
          if (p2 != p && model[p2]->join_class[cls])
            qp.constraints.push_back(minus(own, p2, *model[p2]->join_class[cls]));
      }
    }
    // Leftover singletons must not want to join any coalition.
    const QuadraticProgram::Constraint zero{0, std::vector<Value>(nv, 0), -1};
    for (size_t c = 0; c < classes_.size(); ++c)
      for (int p2 = 0; p2 < m; ++p2)
        if (model[p2]->join_class[c]) {
          auto con = minus(zero, p2, *model[p2]->join_class[c]);
          con.when_slack = static_cast<int>(c);
          qp.constraints.push_back(std::move(con));
        }
    return qp;
  }

 private:
  ExtendedValue score(int d) const { return d < 0 ? ExtendedValue::neg_inf() : s_.at(d); }

  static void add(LocalExpr& e, ExtendedValue score, int c) {
    if (score.is_neg_inf()) {
      e.finite = false;
      return;
    }
    if (c < 0) e.constant += score.value();
    else e.coef[c] += score.value();
  }

  const PartModel& part(const std::vector<Agent>& cover, const std::vector<int>& declared) {
    auto key = std::make_pair(cover, declared);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    PartModel pm;
    pm.q = make_quotient(g_, classes_, cover, declared);
    const Quotient& q = pm.q;
    const int k = static_cast<int>(cover.size());
    const int d = static_cast<int>(declared.size());
    for (int i = 0; i < k; ++i) {
      LocalExpr e{true, 0, std::vector<Value>(d, 0)};
      for (int j = 0; j < k; ++j)
        if (j != i) add(e, score(q.dist[i][j]), -1);
      for (int c = 0; c < d; ++c) add(e, score(q.dist[i][k + c]), c);
      pm.admissible = pm.admissible && e.finite;
      pm.cover_util.push_back(std::move(e));
    }
    for (int c = 0; c < d; ++c) {
      LocalExpr e{true, 0, std::vector<Value>(d, 0)};
      for (int j = 0; j < k; ++j) add(e, score(q.dist[k + c][j]), -1);
      for (int c2 = 0; c2 < d; ++c2)
        if (c2 != c) add(e, score(q.dist[k + c][k + c2]), c2);
      pm.admissible = pm.admissible && e.finite;
      pm.class_util.push_back(std::move(e));
    }
    if (mode_ == Mode::ns && pm.admissible) {
      pm.join_cover.resize(g_.size());
      for (Agent u : cover_)
        if (!std::binary_search(cover.begin(), cover.end(), u)) pm.join_cover[u] = joining(q, g_.neighbors(u), u);
      for (size_t c = 0; c < classes_.size(); ++c) pm.join_class.push_back(joining(q, classes_[c].cover, -1));
    }
    return cache_.emplace(std::move(key), std::move(pm)).first->second;
  }

  // Utility of an agent with cover neighbours `nbrs` joining the coalition;
  // a cover agent is also adjacent to the declared classes containing it.
  std::optional<LocalExpr> joining(const Quotient& q, const std::vector<Agent>& nbrs, Agent cover_agent) const {
    auto adj = q.adj;
    const int n = q.size();
    for (auto& row : adj) row.push_back(0);
    adj.emplace_back(n + 1, 0);
    bool touches = false;
    for (size_t i = 0; i < q.cover.size(); ++i)
      if (std::binary_search(nbrs.begin(), nbrs.end(), q.cover[i])) adj[n][i] = adj[i][n] = 1, touches = true;
    if (cover_agent >= 0)
      for (size_t c = 0; c < q.classes.size(); ++c) {
        const auto& w = classes_[q.classes[c]].cover;
        if (std::binary_search(w.begin(), w.end(), cover_agent)) {
          const int at = static_cast<int>(q.cover.size() + c);
          adj[n][at] = adj[at][n] = 1;
          touches = true;
        }
      }
    if (!touches) return std::nullopt;
    auto dist = bfs(adj, n);
    LocalExpr e{true, 0, std::vector<Value>(q.classes.size(), 0)};
    for (size_t i = 0; i < q.cover.size(); ++i) add(e, score(dist[i]), -1);
    for (size_t c = 0; c < q.classes.size(); ++c) add(e, score(dist[q.cover.size() + c]), static_cast<int>(c));
    if (!e.finite) return std::nullopt;
    return e;
  }

  const ScoringVector& s_;
  const SocialNetwork& g_;
  const std::vector<NeighborhoodClass>& classes_;
  Mode mode_;
  std::vector<Agent> cover_;  // cover agents adjacent to some class
  std::map<std::pair<std::vector<Agent>, std::vector<int>>, PartModel> cache_;
};

}  // namespace

std::optional<QuadraticProgram> build_qp(const ScoringVector& s, const SocialNetwork& g,
                                         const std::vector<NeighborhoodClass>& classes, const CoverStructure& st,
                                         Mode mode) {
  QpBuilder builder(s, g, classes, mode);
  return builder.build(st);
}

std::optional<SolveResult> solve_vc(const ScoringVector& s, const SocialNetwork& g, Mode mode, const VcOptions& opts) {
  const auto cover = compute_vertex_cover(g, opts.cover_nodes);
  if (static_cast<int>(cover.size()) > opts.max_cover)
    throw ResourceLimit("vertex cover of size " + std::to_string(cover.size()) + " exceeds the limit of " +
                        std::to_string(opts.max_cover));
  const auto classes = neighborhood_classes(g, cover);
  QpBuilder builder(s, g, classes, mode);

  std::optional<SolveResult> best;
  long long visited = 0;
  for_each_structure(g, cover, classes, [&](const CoverStructure& st) {
    if (++visited > opts.max_structures)
      throw ResourceLimit("vertex cover solver exceeded " + std::to_string(opts.max_structures) + " structures");
    auto qp = builder.build(st);
    if (!qp) return;
    auto sol = solve_qp(*qp, opts.qp_nodes);
    if (!sol) return;
    if (best && sol->objective < best->welfare) return;
    std::vector<int> label(g.size(), -1);
    std::vector<size_t> taken(classes.size(), 0);
    int next = 0;
    size_t v = 0;
    for (size_t p = 0; p < st.parts.size(); ++p, ++next) {
      for (Agent u : st.parts[p]) label[u] = next;
      for (int c : st.declared[p])
        for (int t = sol->x[v++]; t > 0; --t) label[classes[c].agents[taken[c]++]] = next;
    }
    for (Agent a = 0; a < g.size(); ++a)
      if (label[a] < 0) label[a] = next++;
    SolveResult r{Outcome::from_labels(label), sol->objective, mode, true, "vc"};
    if (!best || r.welfare > best->welfare || r.outcome < best->outcome) best = std::move(r);
  });
  if (best && (social_welfare(s, g, best->outcome) != best->welfare || !satisfies(s, g, best->outcome, mode)))
    throw std::logic_error("vertex cover solver produced an outcome that fails certification");
  return best;
}

}  // namespace sdg
