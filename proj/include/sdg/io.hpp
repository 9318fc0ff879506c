// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sdg/bounds.hpp"
#include "sdg/solve.hpp"

namespace sdg {

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// PACE graph format: "c" comments, one "p tw <n> <m>" line, then m lines
// "<u> <v>" with 1-indexed agents. Without a "p" line the content is read as
// a plain edge list of 0-indexed pairs with n = largest agent + 1.
SocialNetwork read_graph(std::string_view text);
std::string write_graph(const SocialNetwork& g, const std::vector<std::string>& comments = {});

// One coalition per line, space separated, 1-indexed; "c" lines are comments.
Outcome read_outcome(std::string_view text, int n);
std::string write_outcome(const Outcome& pi);

nlohmann::json to_json(const ExtendedValue& v);
ExtendedValue extended_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Outcome& pi);
Outcome outcome_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SolveResult& r);
SolveResult solve_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Deviation& d);
nlohmann::json to_json(const BoundReport& b);
nlohmann::json to_json(const Certificate& c);

}  // namespace sdg
