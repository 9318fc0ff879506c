// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/treedecomp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "sdg/errors.hpp"

namespace sdg {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
  return w;
}

TreeDecomposition read_td(std::string_view content) {
  TreeDecomposition td;
  std::istringstream in{std::string(content)};
  std::string line;
  int lineno = 0, declared_bags = -1;
  std::vector<char> defined;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head == "c") continue;
    if (head == "s") {
      std::string kind;
      int b = 0, w = 0, n = 0;
      if (!(ls >> kind >> b >> w >> n) || kind != "td" || b < 0 || n < 0)
        throw ParseError(lineno, "expected 's td <bags> <max-bag> <vertices>'");
      if (declared_bags >= 0) throw ParseError(lineno, "duplicate solution line");
      declared_bags = b;
      td.vertex_count = n;
      td.bags.assign(b, {});
      defined.assign(b, 0);
      continue;
    }
    if (declared_bags < 0) throw ParseError(lineno, "content before 's td' line");
    if (head == "b") {
      int id = 0;
      if (!(ls >> id) || id < 1 || id > declared_bags) throw ParseError(lineno, "bad bag id");
      if (defined[id - 1]) throw ParseError(lineno, "bag " + std::to_string(id) + " defined twice");
      defined[id - 1] = 1;
      int v = 0;
      while (ls >> v) {
        if (v < 1 || v > td.vertex_count)
          throw ParseError(lineno, "vertex " + std::to_string(v) + " outside 1.." +
                                       std::to_string(td.vertex_count));
        td.bags[id - 1].push_back(v - 1);
      }
      if (!ls.eof()) throw ParseError(lineno, "non-numeric token in bag");
      auto& bag = td.bags[id - 1];
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
        throw ParseError(lineno, "repeated vertex in bag");
      continue;
    }
    int a = 0, b = 0;
    std::istringstream es(line);
    if (!(es >> a >> b) || a < 1 || b < 1 || a > declared_bags || b > declared_bags)
      throw ParseError(lineno, "expected tree edge '<bag> <bag>'");
    std::string extra;
    if (es >> extra) throw ParseError(lineno, "trailing tokens after tree edge");
    td.edges.emplace_back(a - 1, b - 1);
  }
  if (declared_bags < 0) throw ParseError(lineno, "missing 's td' line");
  for (int k = 0; k < declared_bags; ++k)
    if (!defined[k]) throw ParseError(lineno, "bag " + std::to_string(k + 1) + " never defined");
  return td;
}

std::string write_td(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << td.vertex_count << '\n';
  for (size_t k = 0; k < td.bags.size(); ++k) {
    out << "b " << k + 1;
    for (Agent v : td.bags[k]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

namespace {

// Tree shape and connected occurrences, independent of the graph.
std::optional<TdViolation> structural_violation(const TreeDecomposition& td) {
  using K = TdViolation::Kind;
  const int b = static_cast<int>(td.bags.size());
  for (int k = 0; k < b; ++k)
    for (Agent v : td.bags[k])
      if (v < 0 || v >= td.vertex_count)
        return TdViolation{K::vertex_range, "bag " + std::to_string(k) + " holds agent " +
                                                std::to_string(v) + " outside the network"};
  if (b == 0) return std::nullopt;
  if (static_cast<int>(td.edges.size()) != b - 1)
    return TdViolation{K::not_a_tree, std::to_string(td.edges.size()) + " tree edges for " +
                                          std::to_string(b) + " bags"};
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : td.edges) {
    if (x < 0 || y < 0 || x >= b || y >= b || x == y)
      return TdViolation{K::not_a_tree, "bad tree edge"};
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<char> seen(b, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != b) return TdViolation{K::not_a_tree, "decomposition tree is disconnected"};

  // Occurrence subtrees: in a tree, nodes holding v are connected iff
  // (#holding nodes) - (#tree edges with both ends holding v) == 1.
  std::vector<int> nodes_with(td.vertex_count, 0), edges_with(td.vertex_count, 0);
  for (const auto& bag : td.bags)
    for (Agent v : bag) ++nodes_with[v];
  for (auto [x, y] : td.edges) {
    const auto& bx = td.bags[x];
    const auto& by = td.bags[y];
    std::vector<Agent> common;
    std::set_intersection(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(common));
    for (Agent v : common) ++edges_with[v];
  }
  for (Agent v = 0; v < td.vertex_count; ++v)
    if (nodes_with[v] > 0 && nodes_with[v] - edges_with[v] != 1)
      return TdViolation{K::disconnected_occurrence,
                         "bags holding agent " + std::to_string(v) + " are not connected"};
  return std::nullopt;
}

}  // namespace

TdValidation validate(const SocialNetwork& g, const TreeDecomposition& td) {
  using K = TdViolation::Kind;
  TdValidation out;
  TreeDecomposition view = td;
  view.vertex_count = g.size();
  for (const auto& bag : td.bags)
    for (Agent v : bag)
      if (v < 0 || v >= g.size()) {
        out.violation = TdViolation{K::vertex_range, "agent " + std::to_string(v) +
                                                         " is not in the network"};
        return out;
      }
  if (g.size() > 0 && td.bags.empty()) {
    out.violation = TdViolation{K::vertex_coverage, "agent 0 is in no bag"};
    return out;
  }
  if (auto v = structural_violation(view)) {
    out.violation = v;
    return out;
  }
  std::vector<char> covered(g.size(), 0);
  for (const auto& bag : td.bags)
    for (Agent v : bag) covered[v] = 1;
  for (Agent v = 0; v < g.size(); ++v)
    if (!covered[v]) {
      out.violation = TdViolation{K::vertex_coverage, "agent " + std::to_string(v) + " is in no bag"};
      return out;
    }
  for (auto [u, v] : g.edges()) {
    bool found = std::any_of(td.bags.begin(), td.bags.end(), [&](const auto& bag) {
      return std::binary_search(bag.begin(), bag.end(), u) && std::binary_search(bag.begin(), bag.end(), v);
    });
    if (!found) {
      out.violation = TdViolation{K::edge_coverage, "edge (" + std::to_string(u) + "," +
                                                         std::to_string(v) + ") is in no bag"};
      return out;
    }
  }
  out.width = td.width();
  return out;
}

namespace {

using Bits = std::uint64_t;

// Fill-in-aware elimination on an adjacency matrix; returns the width.
int elimination_width(const SocialNetwork& g, const std::vector<Agent>& order) {
  const int n = g.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<char> gone(n, 0);
  int width = n > 0 ? 0 : -1;
  for (Agent v : order) {
    std::vector<Agent> nb;
    for (Agent u = 0; u < n; ++u)
      if (!gone[u] && adj[v][u]) nb.push_back(u);
    width = std::max(width, static_cast<int>(nb.size()));
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) adj[nb[a]][nb[b]] = adj[nb[b]][nb[a]] = 1;
    gone[v] = 1;
  }
  return width;
}

std::vector<Agent> min_fill_order(const SocialNetwork& g) {
  const int n = g.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<char> gone(n, 0);
  std::vector<Agent> order;
  for (int step = 0; step < n; ++step) {
    Agent pick = -1;
    long best_fill = 0;
    int best_deg = 0;
    for (Agent v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::vector<Agent> nb;
      for (Agent u = 0; u < n; ++u)
        if (!gone[u] && adj[v][u]) nb.push_back(u);
      long fill = 0;
      for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b)
          if (!adj[nb[a]][nb[b]]) ++fill;
      int deg = static_cast<int>(nb.size());
      if (pick < 0 || fill < best_fill || (fill == best_fill && deg < best_deg)) {
        pick = v;
        best_fill = fill;
        best_deg = deg;
      }
    }
    std::vector<Agent> nb;
    for (Agent u = 0; u < n; ++u)
      if (!gone[u] && adj[pick][u]) nb.push_back(u);
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) adj[nb[a]][nb[b]] = adj[nb[b]][nb[a]] = 1;
    gone[pick] = 1;
    order.push_back(pick);
  }
  return order;
}

// Minor-min-width lower bound on the treewidth of the graph on `alive`.
int minor_min_width(std::vector<Bits> adj, Bits alive) {
  int lb = 0;
  while (std::popcount(alive) > 1) {
    int v = -1, dv = 0;
    for (Bits r = alive; r; r &= r - 1) {
      int x = std::countr_zero(r);
      int d = std::popcount(adj[x] & alive);
      if (v < 0 || d < dv) {
        v = x;
        dv = d;
      }
    }
    lb = std::max(lb, dv);
    Bits nv = adj[v] & alive;
    if (!nv) {
      alive &= ~(Bits{1} << v);
      continue;
    }
    int u = -1, du = 0;
    for (Bits r = nv; r; r &= r - 1) {
      int x = std::countr_zero(r);
      int d = std::popcount(adj[x] & alive);
      if (u < 0 || d < du) {
        u = x;
        du = d;
      }
    }
    // Contract v into u.
    Bits merged = (adj[u] | adj[v]) & ~(Bits{1} << u) & ~(Bits{1} << v);
    adj[u] = merged;
    for (Bits r = merged; r; r &= r - 1) {
      int x = std::countr_zero(r);
      adj[x] = (adj[x] & ~(Bits{1} << v)) | (Bits{1} << u);
    }
    alive &= ~(Bits{1} << v);
  }
  return lb;
}

class OrderSearch {
 public:
  OrderSearch(const SocialNetwork& g, long long budget, int best, std::vector<Agent> best_order)
      : n_(g.size()), budget_(budget), best_(best), best_order_(std::move(best_order)) {
    adj_.assign(n_, 0);
    for (auto [u, v] : g.edges()) {
      adj_[u] |= Bits{1} << v;
      adj_[v] |= Bits{1} << u;
    }
  }

  void run() {
    Bits all = n_ == 64 ? ~Bits{0} : (Bits{1} << n_) - 1;
    dfs(adj_, all, -1);
  }

  bool exhausted() const { return exhausted_; }
  int best() const { return best_; }
  const std::vector<Agent>& best_order() const { return best_order_; }

 private:
  static void eliminate(std::vector<Bits>& adj, int v, Bits alive) {
    Bits nv = adj[v] & alive;
    for (Bits r = nv; r; r &= r - 1) {
      int x = std::countr_zero(r);
      adj[x] |= nv & ~(Bits{1} << x);
      adj[x] &= ~(Bits{1} << v);
    }
  }

  void dfs(const std::vector<Bits>& adj, Bits alive, int width) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const int cnt = std::popcount(alive);
    if (cnt == 0 || cnt - 1 <= width) {
      int total = std::max(width, cnt - 1);
      if (total < best_) record(total, alive);
      return;
    }
    Bits gone = ~alive & (n_ == 64 ? ~Bits{0} : (Bits{1} << n_) - 1);
    auto it = memo_.find(gone);
    if (it != memo_.end() && it->second <= width) return;
    memo_[gone] = width;
    if (std::max(width, minor_min_width(adj, alive)) >= best_) return;

    // A simplicial vertex can always be eliminated first.
    for (Bits r = alive; r; r &= r - 1) {
      int v = std::countr_zero(r);
      Bits nv = adj[v] & alive;
      bool clique = true;
      for (Bits q = nv; q && clique; q &= q - 1) {
        int x = std::countr_zero(q);
        if ((adj[x] & nv) != (nv & ~(Bits{1} << x))) clique = false;
      }
      if (!clique) continue;
      int w = std::max(width, std::popcount(nv));
      if (w >= best_) return;
      auto next = adj;
      eliminate(next, v, alive);
      order_.push_back(v);
      dfs(next, alive & ~(Bits{1} << v), w);
      order_.pop_back();
      return;
    }

    std::vector<std::pair<int, int>> cand;
    for (Bits r = alive; r; r &= r - 1) {
      int v = std::countr_zero(r);
      cand.emplace_back(std::popcount(adj[v] & alive), v);
    }
    std::sort(cand.begin(), cand.end());
    for (auto [d, v] : cand) {
      int w = std::max(width, d);
      if (w >= best_) continue;
      auto next = adj;
      eliminate(next, v, alive);
      order_.push_back(v);
      dfs(next, alive & ~(Bits{1} << v), w);
      order_.pop_back();
      if (exhausted_) return;
    }
  }

  void record(int total, Bits alive) {
    best_ = total;
    best_order_ = order_;
    for (Bits r = alive; r; r &= r - 1) best_order_.push_back(std::countr_zero(r));
  }

  int n_;
  long long budget_;
  long long nodes_ = 0;
  bool exhausted_ = false;
  int best_;
  std::vector<Agent> best_order_;
  std::vector<Agent> order_;
  std::vector<Bits> adj_;
  std::unordered_map<Bits, int> memo_;
};

}  // namespace

TreeDecomposition decomposition_from_order(const SocialNetwork& g, const std::vector<Agent>& order) {
  const int n = g.size();
  if (static_cast<int>(order.size()) != n) throw InvalidArgument("order must list every agent once");
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) {
    if (order[k] < 0 || order[k] >= n || pos[order[k]] >= 0)
      throw InvalidArgument("order must list every agent once");
    pos[order[k]] = k;
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<std::vector<Agent>> bag(n);
  std::vector<int> parent(n, -1);  // by elimination position
  for (int k = 0; k < n; ++k) {
    Agent v = order[k];
    std::vector<Agent> higher;
    for (Agent u = 0; u < n; ++u)
      if (adj[v][u] && pos[u] > k) higher.push_back(u);
    for (size_t a = 0; a < higher.size(); ++a)
      for (size_t b = a + 1; b < higher.size(); ++b) adj[higher[a]][higher[b]] = adj[higher[b]][higher[a]] = 1;
    bag[k] = higher;
    bag[k].push_back(v);
    std::sort(bag[k].begin(), bag[k].end());
    int p = -1;
    for (Agent u : higher)
      if (p < 0 || pos[u] < p) p = pos[u];
    parent[k] = p;
  }
  // Drop bags contained in their parent's bag; children move up.
  std::vector<char> keep(n, 1);
  for (int k = 0; k < n; ++k) {
    int p = parent[k];
    if (p >= 0 && std::includes(bag[p].begin(), bag[p].end(), bag[k].begin(), bag[k].end())) keep[k] = 0;
  }
  auto kept_ancestor = [&](int k) {
    int p = parent[k];
    while (p >= 0 && !keep[p]) p = parent[p];
    return p;
  };
  TreeDecomposition td;
  td.vertex_count = n;
  std::vector<int> index(n, -1);
  for (int k = 0; k < n; ++k)
    if (keep[k]) {
      index[k] = static_cast<int>(td.bags.size());
      td.bags.push_back(bag[k]);
    }
  int prev_root = -1;
  for (int k = 0; k < n; ++k) {
    if (!keep[k]) continue;
    int p = kept_ancestor(k);
    if (p >= 0) {
      td.edges.emplace_back(index[k], index[p]);
    } else {
      if (prev_root >= 0) td.edges.emplace_back(prev_root, index[k]);
      prev_root = index[k];
    }
  }
  return td;
}

ComputedDecomposition compute_decomposition(const SocialNetwork& g, const DecompositionBudget& budget) {
  const int n = g.size();
  auto order = min_fill_order(g);
  int width = elimination_width(g, order);
  bool exact = n <= 1;
  if (n > 1 && n <= std::min(budget.exact_max_vertices, 64)) {
    OrderSearch search(g, budget.search_nodes, width, order);
    search.run();
    order = search.best_order();
    exact = !search.exhausted();
  }
  return ComputedDecomposition{decomposition_from_order(g, order), exact};
}

int treewidth_by_enumeration(const SocialNetwork& g) {
  if (g.size() > 10) throw ResourceLimit("enumeration of elimination orders limited to 10 agents");
  std::vector<Agent> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  int best = g.size() > 0 ? g.size() - 1 : -1;
  do {
    best = std::min(best, elimination_width(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  if (auto v = structural_violation(td)) throw InvalidArgument("invalid tree decomposition: " + v->message);
  NiceTreeDecomposition out;
  out.vertex_count = td.vertex_count;
  auto add = [&](NodeKind kind, Agent agent, std::vector<int> children) {
    NiceNode nd;
    nd.kind = kind;
    nd.agent = agent;
    nd.children = std::move(children);
    if (kind == NodeKind::introduce) {
      nd.bag = out.nodes[nd.children[0]].bag;
      nd.bag.insert(std::upper_bound(nd.bag.begin(), nd.bag.end(), agent), agent);
    } else if (kind == NodeKind::forget) {
      nd.bag = out.nodes[nd.children[0]].bag;
      nd.bag.erase(std::find(nd.bag.begin(), nd.bag.end(), agent));
    } else if (kind == NodeKind::join) {
      nd.bag = out.nodes[nd.children[0]].bag;
    }
    out.nodes.push_back(std::move(nd));
    return static_cast<int>(out.nodes.size()) - 1;
  };
  if (td.bags.empty()) {
    add(NodeKind::leaf, -1, {});
    return out;
  }
  const int b = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : td.edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  // Post-order from bag 0.
  std::vector<int> parent(b, -1), post;
  std::vector<std::pair<int, size_t>> stack{{0, 0}};
  parent[0] = 0;
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i < adj[x].size()) {
      int y = adj[x][i++];
      if (parent[y] < 0) {
        parent[y] = x;
        stack.emplace_back(y, 0);
      }
    } else {
      post.push_back(x);
      stack.pop_back();
    }
  }
  std::vector<int> top(b, -1);
  for (int x : post) {
    const auto& bx = td.bags[x];
    std::vector<int> branches;
    for (int y : adj[x]) {
      if (parent[y] != x || y == x) continue;
      int cur = top[y];
      for (Agent v : td.bags[y])
        if (!std::binary_search(bx.begin(), bx.end(), v)) cur = add(NodeKind::forget, v, {cur});
      for (Agent v : bx)
        if (!std::binary_search(td.bags[y].begin(), td.bags[y].end(), v)) cur = add(NodeKind::introduce, v, {cur});
      branches.push_back(cur);
    }
    int cur;
    if (branches.empty()) {
      cur = add(NodeKind::leaf, -1, {});
      for (Agent v : bx) cur = add(NodeKind::introduce, v, {cur});
    } else {
      cur = branches[0];
      for (size_t k = 1; k < branches.size(); ++k) cur = add(NodeKind::join, -1, {cur, branches[k]});
    }
    top[x] = cur;
  }
  int cur = top[0];
  for (Agent v : td.bags[0]) cur = add(NodeKind::forget, v, {cur});
  return out;
}

std::optional<std::string> check_nice(const SocialNetwork& g, const NiceTreeDecomposition& ntd) {
  const int m = static_cast<int>(ntd.nodes.size());
  if (m == 0) return "no nodes";
  std::vector<int> parents(m, 0);
  TreeDecomposition td;
  td.vertex_count = g.size();
  for (int k = 0; k < m; ++k) {
    const auto& nd = ntd.nodes[k];
    std::string at = "node " + std::to_string(k) + ": ";
    for (int c : nd.children) {
      if (c < 0 || c >= k) return at + "child does not precede parent";
      ++parents[c];
      td.edges.emplace_back(c, k);
    }
    if (!std::is_sorted(nd.bag.begin(), nd.bag.end())) return at + "bag not sorted";
    td.bags.push_back(nd.bag);
    auto child_bag = [&](int i) -> const std::vector<Agent>& { return ntd.nodes[nd.children[i]].bag; };
    switch (nd.kind) {
      case NodeKind::leaf:
        if (!nd.children.empty() || !nd.bag.empty()) return at + "leaf must be childless with empty bag";
        break;
      case NodeKind::introduce: {
        if (nd.children.size() != 1) return at + "introduce needs one child";
        auto expect = child_bag(0);
        if (std::binary_search(expect.begin(), expect.end(), nd.agent)) return at + "introduced agent already present";
        expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.agent), nd.agent);
        if (expect != nd.bag) return at + "introduce bag mismatch";
        break;
      }
      case NodeKind::forget: {
        if (nd.children.size() != 1) return at + "forget needs one child";
        auto expect = child_bag(0);
        auto it = std::find(expect.begin(), expect.end(), nd.agent);
        if (it == expect.end()) return at + "forgotten agent absent from child";
        expect.erase(it);
        if (expect != nd.bag) return at + "forget bag mismatch";
        break;
      }
      case NodeKind::join:
        if (nd.children.size() != 2) return at + "join needs two children";
        if (child_bag(0) != nd.bag || child_bag(1) != nd.bag) return at + "join bags differ";
        break;
    }
  }
  for (int k = 0; k + 1 < m; ++k)
    if (parents[k] != 1) return "node " + std::to_string(k) + " has " + std::to_string(parents[k]) + " parents";
  if (parents[m - 1] != 0) return std::string("root has a parent");
  if (!ntd.nodes.back().bag.empty()) return std::string("root bag not empty");
  auto v = validate(g, td);
  if (!v.ok()) return v.violation->message;
  return std::nullopt;
}

}  // namespace sdg
