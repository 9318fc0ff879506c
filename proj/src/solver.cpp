// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/solver.hpp"

#include <algorithm>
#include <chrono>

#include "sdg/errors.hpp"

namespace sdg {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::automatic: return "auto";
    case Algorithm::brute: return "brute";
    case Algorithm::twdp: return "twdp";
    case Algorithm::fptdp: return "fptdp";
    case Algorithm::vc: return "vc";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  for (Algorithm a : {Algorithm::automatic, Algorithm::brute, Algorithm::twdp, Algorithm::fptdp, Algorithm::vc})
    if (text == to_string(a)) return a;
  throw InvalidArgument("unknown algorithm '" + std::string(text) + "'");
}

namespace {

constexpr int kBruteAuto = 10;
constexpr int kTwdpWidth = 4;
constexpr int kVcCover = 8;
constexpr int kBruteFallbackCap = 16;

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Decomposition of the component `agents` (relabelled 0..k-1).
TreeDecomposition restrict_td(const TreeDecomposition& td, const std::vector<Agent>& agents, int n) {
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < agents.size(); ++i) pos[agents[i]] = static_cast<int>(i);
  TreeDecomposition out{static_cast<int>(agents.size()), {}, td.edges};
  for (const auto& bag : td.bags) {
    std::vector<Agent> b;
    for (Agent v : bag)
      if (pos[v] >= 0) b.push_back(pos[v]);
    std::sort(b.begin(), b.end());
    out.bags.push_back(std::move(b));
  }
  return out;
}

}  // namespace

Algorithm select_algorithm(const ScoringVector& s, const SocialNetwork& g, Mode mode, std::string* reason) {
  (void)mode;
  auto why = [&](std::string text) {
    if (reason) *reason = std::move(text);
  };
  const int n = g.size();
  if (n <= kBruteAuto) {
    why(std::to_string(n) + " agents <= " + std::to_string(kBruteAuto));
    return Algorithm::brute;
  }
  const int width = compute_decomposition(g).decomposition.width();
  if (width <= kTwdpWidth && s.tail() == Tail::closed) {
    why("decomposition width " + std::to_string(width) + " <= " + std::to_string(kTwdpWidth) + " and closed tail");
    return Algorithm::twdp;
  }
  if (auto sz = select_sz(s, g)) {
    why("coalition size bound " + std::to_string(*sz) + " applies");
    return Algorithm::fptdp;
  }
  try {
    const auto cover = compute_vertex_cover(g);
    if (static_cast<int>(cover.size()) <= kVcCover) {
      why("vertex cover " + std::to_string(cover.size()) + " <= " + std::to_string(kVcCover));
      return Algorithm::vc;
    }
  } catch (const ResourceLimit&) {
  }
  why("no structural parameter is small; brute force with the agent cap raised to " +
      std::to_string(kBruteFallbackCap));
  return Algorithm::brute;
}

std::optional<SolveResult> solve_with(Algorithm a, const ScoringVector& s, const SocialNetwork& g, Mode mode,
                                      const SolveOptions& opts, const TreeDecomposition* td) {
  auto nice_for = [&] {
    if (td) {
      auto v = validate(g, *td);
      if (!v.ok()) throw InvalidArgument("supplied tree decomposition is invalid: " + v.violation->message);
      return make_nice(*td);
    }
    return make_nice(compute_decomposition(g).decomposition);
  };
  switch (a) {
    case Algorithm::automatic:
      return solve_with(select_algorithm(s, g, mode), s, g, mode, opts, td);
    case Algorithm::brute: {
      OracleOptions o = opts.oracle;
      if (opts.algorithm == Algorithm::automatic && g.size() > o.max_agents) o.max_agents = kBruteFallbackCap;
      return brute_force_solve(s, g, mode, o);
    }
    case Algorithm::twdp:
      return solve_tw(s, g, nice_for(), mode, opts.twdp);
    case Algorithm::fptdp: {
      int sz = opts.sz ? *opts.sz : select_sz(s, g).value_or(g.size());
      return solve_fpt(s, g, nice_for(), std::max(sz, 1), mode, opts.fpt);
    }
    case Algorithm::vc:
      return solve_vc(s, g, mode, opts.vc);
  }
  throw InvalidArgument("unknown algorithm");
}

SolveReport solve(const ScoringVector& s, const SocialNetwork& g, Mode mode, const SolveOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  if (opts.algorithm == Algorithm::twdp && s.tail() == Tail::open)
    throw Unsupported("twdp needs a closed scoring vector; use fptdp, vc or brute for open vectors");
  if (opts.td && opts.td->vertex_count != g.size())
    throw InvalidArgument("tree decomposition is for " + std::to_string(opts.td->vertex_count) + " agents, network has " +
                          std::to_string(g.size()));
  SolveReport report;
  std::vector<int> label(g.size(), -1);
  ExtendedValue welfare = 0;
  bool optimal = true;
  bool feasible = true;
  std::string algos;
  for (const auto& agents : g.components()) {
    const auto tc = std::chrono::steady_clock::now();
    const SocialNetwork sub = g.induced(agents);
    ComponentReport cr{agents, opts.algorithm, "requested"};
    if (opts.algorithm == Algorithm::automatic) cr.algorithm = select_algorithm(s, sub, mode, &cr.reason);
    std::optional<TreeDecomposition> td;
    if (opts.td) td = restrict_td(*opts.td, agents, g.size());
    auto part = solve_with(cr.algorithm, s, sub, mode, opts, td ? &*td : nullptr);
    cr.seconds = since(tc);
    report.components.push_back(cr);
    if (!part) {
      feasible = false;
      continue;
    }
    welfare += part->welfare;
    optimal = optimal && part->optimal;
    for (const auto& c : part->outcome.coalitions()) {
      const int id = agents[c.front()];
      for (Agent a : c) label[agents[a]] = id;
    }
    if (algos.find(part->algorithm) == std::string::npos) algos += (algos.empty() ? "" : "+") + part->algorithm;
  }
  if (feasible) {
    if (g.size() == 0) algos = "none";
    report.result = SolveResult{Outcome::from_labels(label), welfare, mode, optimal, algos};
  }
  report.seconds = since(t0);
  return report;
}

}  // namespace sdg
