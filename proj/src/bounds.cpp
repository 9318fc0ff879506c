// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/bounds.hpp"

#include <algorithm>
#include <limits>

#include "sdg/errors.hpp"
#include "sdg/treedecomp.hpp"

namespace sdg {

namespace {

constexpr long long kCap = std::numeric_limits<int>::max();

// Largest possible number of agents at distance 1..k from a fixed agent.
long long ball(int max_degree, int k) {
  long long total = 0, layer = max_degree;
  for (int j = 1; j <= k && layer > 0; ++j) {
    total = std::min(kCap, total + layer);
    layer = std::min(kCap, layer * std::max(max_degree - 1, 0));
  }
  return total;
}

}  // namespace

int degree_coalition_bound(const ScoringVector& s, int max_degree) {
  if (s.tail() != Tail::closed) throw Unsupported("degree bound needs a closed scoring vector");
  if (max_degree < 0) throw InvalidArgument("negative maximum degree");
  long long bound = 1 + ball(max_degree, s.delta());
  if (s.last() < 0) {
    long long near = ball(max_degree, s.delta() - 1);
    bound = std::min(bound, (std::max(s.s1(), 0) + 1LL) * near + 1);
  }
  return static_cast<int>(std::min(bound, kCap));
}

int treewidth_coalition_bound(const ScoringVector& s, int tw) {
  if (tw < 0) throw InvalidArgument("negative treewidth");
  if (!(s.at(2) < ExtendedValue(0))) throw PreconditionViolated("treewidth bound needs s(2) < 0");
  long long b = 2LL * std::max(s.s1() + 1, 0) * tw + 1;
  return static_cast<int>(std::clamp(b, 1LL, kCap));
}

int stable_diameter_limit(const ScoringVector& s) {
  if (s.tail() != Tail::open) throw Unsupported("diameter limit applies to open scoring vectors");
  if (s.s1() <= 0) throw PreconditionViolated("diameter limit needs s1 > 0");
  if (s.last() >= 0) throw PreconditionViolated("diameter limit needs a negative last score");
  return 2 * s.s1() * s.delta();
}

BoundReport bound_report(const ScoringVector& s, int max_degree, std::optional<int> tw) {
  BoundReport r;
  r.welfare_diameter_limit = s.delta();
  if (s.tail() == Tail::closed) r.max_coalition_size_degree = degree_coalition_bound(s, max_degree);
  if (tw && s.at(2) < ExtendedValue(0)) r.max_coalition_size_treewidth = treewidth_coalition_bound(s, *tw);
  if (s.tail() == Tail::open && s.s1() > 0 && s.last() < 0) r.stable_diameter_limit = stable_diameter_limit(s);
  return r;
}

Certificate certify_outcome(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi, Mode mode) {
  if (pi.agent_count() != g.size()) throw InvalidArgument("outcome size does not match network");
  Certificate c;
  c.mode = mode;
  c.welfare = social_welfare(s, g, pi);
  for (Agent i = 0; i < g.size(); ++i) c.utilities.push_back(agent_utility(s, g, pi, i));
  c.ir_deviation = find_deviation(s, g, pi, Mode::ir);
  c.ns_deviation = find_deviation(s, g, pi, Mode::ns);
  c.individually_rational = !c.ir_deviation;
  c.nash_stable = !c.ns_deviation;
  for (const auto& coal : pi.coalitions())
    c.coalitions.push_back({coal, coalition_diameter(g, coal), coalition_welfare(s, g, coal)});

  auto tw = compute_decomposition(g, {.exact_max_vertices = 0}).decomposition.width();
  c.bounds = bound_report(s, g.max_degree(), std::max(tw, 0));

  if (mode == Mode::ir && c.ir_deviation)
    c.violations.push_back("not individually rational: agent " + std::to_string(c.ir_deviation->agent + 1) +
                           " has utility " + c.ir_deviation->before.to_string());
  if (mode == Mode::ns && c.ns_deviation)
    c.violations.push_back("not Nash stable: " + c.ns_deviation->to_string());

  for (size_t k = 0; k < c.coalitions.size(); ++k) {
    const auto& cr = c.coalitions[k];
    const int size = static_cast<int>(cr.members.size());
    const std::string name = "coalition " + std::to_string(k + 1);
    if (c.bounds.max_coalition_size_degree && size > *c.bounds.max_coalition_size_degree)
      c.bound_violations.push_back(name + " has " + std::to_string(size) + " agents, degree bound " +
                                   std::to_string(*c.bounds.max_coalition_size_degree));
    if (c.bounds.max_coalition_size_treewidth && size > *c.bounds.max_coalition_size_treewidth)
      c.bound_violations.push_back(name + " has " + std::to_string(size) + " agents, treewidth bound " +
                                   std::to_string(*c.bounds.max_coalition_size_treewidth));
    if (s.tail() == Tail::closed && cr.diameter.is_finite() && cr.diameter > ExtendedValue(s.delta()))
      c.bound_violations.push_back(name + " has diameter " + cr.diameter.to_string() + " > " +
                                   std::to_string(s.delta()));
    if (c.bounds.stable_diameter_limit && cr.diameter.is_finite() &&
        cr.diameter > ExtendedValue(*c.bounds.stable_diameter_limit))
      c.bound_violations.push_back(name + " has diameter " + cr.diameter.to_string() +
                                   " above the stable limit " + std::to_string(*c.bounds.stable_diameter_limit));
  }
  return c;
}

}  // namespace sdg
