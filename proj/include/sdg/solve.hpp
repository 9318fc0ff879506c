// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <string>

#include "sdg/core.hpp"
#include "sdg/stability.hpp"

namespace sdg {

struct SolveResult {
  Outcome outcome;
  ExtendedValue welfare;
  Mode mode = Mode::welfare;
  // False when the search space was restricted (e.g. a coalition-size cap
  // below every valid bound), so the result is only optimal within it.
  bool optimal = true;
  std::string algorithm;

  bool operator==(const SolveResult&) const = default;
};

}  // namespace sdg
