// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sdg/core.hpp"

namespace sdg {

enum class Mode { welfare, ir, ns };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view text);

struct Deviation {
  enum class Kind { to_singleton, to_coalition };

  Agent agent = 0;
  Kind kind = Kind::to_singleton;
  // Canonical coalition index of the target; empty for to_singleton.
  std::optional<int> target;
  ExtendedValue before;
  ExtendedValue after;

  // after - before; empty when `before` is -inf (the gain is unbounded).
  std::optional<std::int64_t> gain() const;
  // Agents and coalitions numbered from 1, as in .out files.
  std::string to_string() const;
};

bool is_individually_rational(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi);
bool is_nash_stable(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi);

// Agents are scanned in ascending order; for ns, targets in canonical coalition
// order and the fresh singleton last. Mode::welfare never deviates.
std::optional<Deviation> find_deviation(const ScoringVector& s, const SocialNetwork& g,
                                        const Outcome& pi, Mode mode);

// Whether `pi` satisfies the predicate of `mode` (always true for welfare).
bool satisfies(const ScoringVector& s, const SocialNetwork& g, const Outcome& pi, Mode mode);

}  // namespace sdg
