// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/reductions.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "sdg/errors.hpp"

namespace sdg {

NaeFormula NaeFormula::parse(std::string_view text) {
  NaeFormula phi;
  bool marked = false, header = false;
  int declared = 0;
  std::vector<int> pending;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") {
      std::string word;
      if (ls >> word && word == "nae3sat") marked = true;
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> phi.variables >> declared) || fmt != "cnf" || phi.variables < 0 || declared < 0)
        throw ParseError(line_no, "expected a single 'p cnf <variables> <clauses>' line");
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before the 'p cnf' line");
    for (bool first = true;; first = false) {
      if (!first && !(ls >> tok)) break;
      char* end = nullptr;
      long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw ParseError(line_no, "bad literal '" + tok + "'");
      if (lit == 0) {
        if (pending.size() != 3) throw ParseError(line_no, "clause must have exactly 3 literals");
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (std::labs(lit) > phi.variables) throw ParseError(line_no, "literal " + tok + " names an undeclared variable");
      pending.push_back(static_cast<int>(lit));
    }
  }
  if (!marked) throw ParseError(line_no, "missing 'c nae3sat' marker");
  if (!header) throw ParseError(line_no, "missing 'p cnf' line");
  if (!pending.empty()) throw ParseError(line_no, "unterminated clause");
  if (static_cast<int>(phi.clauses.size()) != declared)
    throw ParseError(line_no, "header declares " + std::to_string(declared) + " clauses, found " +
                                  std::to_string(phi.clauses.size()));
  return phi;
}

std::string NaeFormula::to_dimacs() const {
  std::ostringstream out;
  out << "c nae3sat\np cnf " << variables << ' ' << clauses.size() << '\n';
  for (const auto& c : clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

bool NaeFormula::satisfiable() const {
  if (variables > 24) throw ResourceLimit("NAE brute force limited to 24 variables");
  for (std::uint32_t a = 0; a < (1u << variables); ++a) {
    bool ok = true;
    for (const auto& c : clauses) {
      int trues = 0;
      for (int lit : c) trues += ((a >> (std::abs(lit) - 1)) & 1) == (lit > 0 ? 1u : 0u);
      if (trues == 0 || trues == 3) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

NaeFormula random_nae_formula(int variables, int clauses, std::mt19937_64& rng) {
  if (variables < 1 || clauses < 0) throw InvalidArgument("formula needs at least one variable");
  NaeFormula phi{variables, {}};
  std::uniform_int_distribution<int> var(1, variables);
  std::bernoulli_distribution neg(0.5);
  for (int j = 0; j < clauses; ++j) {
    std::array<int, 3> c{};
    for (int& lit : c) lit = neg(rng) ? -var(rng) : var(rng);
    phi.clauses.push_back(c);
  }
  return phi;
}

TriangleCoveredGraph nae_to_3ctcg(const NaeFormula& phi) {
  const int n = phi.variables;
  const int m = static_cast<int>(phi.clauses.size());
  TriangleCoveredGraph h{SocialNetwork(3 * (n + m)), {}};
  auto triangle = [&](Agent a) {
    h.graph.add_edge(a, a + 1);
    h.graph.add_edge(a, a + 2);
    h.graph.add_edge(a + 1, a + 2);
    h.triangles.push_back({a, a + 1, a + 2});
  };
  for (int i = 0; i < n; ++i) triangle(3 * i);
  for (int i = 0; i + 1 < n; ++i) {
    h.graph.add_edge(3 * i + 1, 3 * (i + 1));
    h.graph.add_edge(3 * i + 2, 3 * (i + 1));
  }
  for (int j = 0; j < m; ++j) {
    const Agent base = 3 * (n + j);
    triangle(base);
    for (int r = 0; r < 3; ++r) {
      const int lit = phi.clauses[j][r];
      const Agent literal = 3 * (std::abs(lit) - 1) + (lit > 0 ? 1 : 2);
      h.graph.add_edge(base + r, literal);
    }
  }
  return h;
}

SdgInstance ctcg_to_sdg(const TriangleCoveredGraph& h, const ScoringVector& s) {
  if (s.tail() != Tail::closed || s.delta() != 1)
    throw PreconditionViolated("the welfare target needs a closed scoring vector with delta = 1");
  if (h.graph.size() % 3 != 0 || static_cast<int>(h.triangles.size()) * 3 != h.graph.size())
    throw InvalidArgument("graph is not covered by disjoint triangles");
  const std::int64_t m = h.graph.size() / 3;
  return {h.graph.complement(), 3 * m * s.s1() * (m - 1)};
}

std::optional<std::vector<int>> three_coloring(const SocialNetwork& g) {
  std::vector<int> col(g.size(), -1);
  std::optional<std::vector<int>> out;
  std::function<bool(Agent)> go = [&](Agent v) -> bool {
    if (v == g.size()) {
      out = col;
      return true;
    }
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (Agent w : g.neighbors(v))
        if (w < v && col[w] == c) ok = false;
      if (!ok) continue;
      col[v] = c;
      if (go(v + 1)) return true;
    }
    col[v] = -1;
    return false;
  };
  go(0);
  return out;
}

std::vector<std::vector<int>> all_three_colorings(const SocialNetwork& g) {
  std::vector<int> col(g.size(), -1);
  std::vector<std::vector<int>> out;
  std::function<void(Agent)> go = [&](Agent v) {
    if (v == g.size()) {
      out.push_back(col);
      return;
    }
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (Agent w : g.neighbors(v))
        if (w < v && col[w] == c) ok = false;
      if (!ok) continue;
      col[v] = c;
      go(v + 1);
    }
    col[v] = -1;
  };
  go(0);
  return out;
}

}  // namespace sdg
