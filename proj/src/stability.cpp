// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/stability.hpp"

#include <algorithm>

#include "sdg/errors.hpp"

namespace sdg {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::welfare: return "welfare";
    case Mode::ir: return "ir";
    case Mode::ns: return "ns";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "welfare") return Mode::welfare;
  if (text == "ir") return Mode::ir;
  if (text == "ns") return Mode::ns;
  throw InvalidArgument("mode must be welfare, ir or ns; got '" + std::string(text) + "'");
}

std::optional<std::int64_t> Deviation::gain() const {
  if (before.is_neg_inf()) return std::nullopt;
  return after.value() - before.value();
}

std::string Deviation::to_string() const {
  std::string out = "agent " + std::to_string(agent + 1) + " -> ";
  out += kind == Kind::to_singleton ? std::string("singleton")
                                    : "coalition " + std::to_string(*target + 1);
  out += " (" + before.to_string() + " -> " + after.to_string() + ")";
  return out;
}

namespace {

std::optional<Deviation> ir_deviation(const ScoringVector& s, const SocialNetwork& g,
                                      const Outcome& pi) {
  for (Agent i = 0; i < g.size(); ++i) {
    ExtendedValue u = agent_utility(s, g, pi, i);
    if (u < ExtendedValue(0))
      return Deviation{i, Deviation::Kind::to_singleton, std::nullopt, u, 0};
  }
  return std::nullopt;
}

std::optional<Deviation> ns_deviation(const ScoringVector& s, const SocialNetwork& g,
                                      const Outcome& pi) {
  for (Agent i = 0; i < g.size(); ++i) {
    ExtendedValue u = agent_utility(s, g, pi, i);
    for (int c = 0; c < pi.coalition_count(); ++c) {
      if (c == pi.index_of(i)) continue;
      const auto& target = pi.coalition(c);
      bool touches = std::any_of(target.begin(), target.end(), [&](Agent a) { return g.adjacent(i, a); });
      // Joining a coalition without a neighbour leaves i disconnected: -inf.
      if (!touches) continue;
      std::vector<Agent> grown = target;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), i), i);
      ExtendedValue v = utility_in(s, g, grown, i);
      if (v > u) return Deviation{i, Deviation::Kind::to_coalition, c, u, v};
    }
    if (pi.coalition_of(i).size() > 1 && u < ExtendedValue(0))
      return Deviation{i, Deviation::Kind::to_singleton, std::nullopt, u, 0};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Deviation> find_deviation(const ScoringVector& s, const SocialNetwork& g,
                                        const Outcome& pi, Mode mode) {
  if (pi.agent_count() != g.size()) throw InvalidArgument("outcome size does not match network");
  switch (mode) {
    case Mode::welfare: return std::nullopt;
    case Mode::ir: return ir_deviation(s, g, pi);
    case Mode::ns: return ns_deviation(s, g, pi);
  }
  return std::nullopt;
}

bool is_individually_rational(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi) {
  return !find_deviation(s, g, pi, Mode::ir);
}

bool is_nash_stable(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi) {
  return !find_deviation(s, g, pi, Mode::ns);
}

bool satisfies(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi, Mode mode) {
  return !find_deviation(s, g, pi, mode);
}

}  // namespace sdg
