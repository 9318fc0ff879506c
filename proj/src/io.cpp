// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include "sdg/io.hpp"

#include <fstream>
#include <sstream>

#include "sdg/errors.hpp"

namespace sdg {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << content;
}

namespace {

bool read_int(std::istringstream& ls, long long& v) { return static_cast<bool>(ls >> v); }

}  // namespace

SocialNetwork read_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<long long, long long>> edges;
  std::vector<int> edge_lines;
  long long n = -1, m = -1;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (n >= 0 || !edges.empty()) throw ParseError(line_no, "'p' line must come first and only once");
      if (!(ls >> fmt) || !read_int(ls, n) || !read_int(ls, m) || n < 0 || m < 0)
        throw ParseError(line_no, "expected 'p tw <agents> <edges>'");
      continue;
    }
    std::istringstream es(line);
    long long u, v;
    std::string extra;
    if (!read_int(es, u) || !read_int(es, v) || (es >> extra)) throw ParseError(line_no, "expected '<u> <v>'");
    edges.emplace_back(u, v);
    edge_lines.push_back(line_no);
  }
  const bool pace = n >= 0;
  if (!pace) {
    n = 0;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  } else if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  SocialNetwork g(static_cast<int>(n));
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (pace) --u, --v;
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(edge_lines[i], "agent out of range");
    try {
      g.add_edge(static_cast<Agent>(u), static_cast<Agent>(v));
    } catch (const InvalidArgument& e) {
      throw ParseError(edge_lines[i], e.what());
    }
  }
  return g;
}

std::string write_graph(const SocialNetwork& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p tw " << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Outcome read_outcome(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::vector<std::vector<Agent>> coalitions;
  std::vector<int> seen_on(n, 0);
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    std::vector<Agent> c;
    while (ls >> tok) {
      if (c.empty() && tok == "c") break;
      char* end = nullptr;
      long a = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw ParseError(line_no, "bad agent '" + tok + "'");
      if (a < 1 || a > n) throw ParseError(line_no, "agent " + tok + " outside 1.." + std::to_string(n));
      if (seen_on[a - 1])
        throw ParseError(line_no, "agent " + tok + " already placed on line " + std::to_string(seen_on[a - 1]));
      seen_on[a - 1] = line_no;
      c.push_back(static_cast<Agent>(a - 1));
    }
    if (!c.empty()) coalitions.push_back(std::move(c));
  }
  for (int a = 0; a < n; ++a)
    if (!seen_on[a]) throw ParseError(line_no, "agent " + std::to_string(a + 1) + " is in no coalition");
  return Outcome(std::move(coalitions), n);
}

std::string write_outcome(const Outcome& pi) {
  std::ostringstream out;
  for (const auto& c : pi.coalitions()) {
    for (size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i] + 1;
    out << '\n';
  }
  return out.str();
}

json to_json(const ExtendedValue& v) { return v.is_finite() ? json(v.value()) : json("-inf"); }

ExtendedValue extended_from_json(const json& j) {
  if (j.is_number_integer()) return ExtendedValue(j.get<std::int64_t>());
  if (j.is_string() && j.get<std::string>() == "-inf") return ExtendedValue::neg_inf();
  throw InvalidArgument("expected an integer or \"-inf\"");
}

json to_json(const Outcome& pi) {
  json cs = json::array();
  for (const auto& c : pi.coalitions()) {
    json members = json::array();
    for (Agent a : c) members.push_back(a + 1);
    cs.push_back(std::move(members));
  }
  return cs;
}

Outcome outcome_from_json(const json& j) {
  std::vector<std::vector<Agent>> cs;
  int n = 0;
  for (const auto& c : j) {
    std::vector<Agent> members;
    for (const auto& a : c) members.push_back(a.get<int>() - 1);
    n += static_cast<int>(members.size());
    cs.push_back(std::move(members));
  }
  return Outcome(std::move(cs), n);
}

json to_json(const SolveResult& r) {
  return json{{"welfare", to_json(r.welfare)},
              {"mode", std::string(to_string(r.mode))},
              {"optimal", r.optimal},
              {"algorithm", r.algorithm},
              {"agents", r.outcome.agent_count()},
              {"outcome", to_json(r.outcome)}};
}

SolveResult solve_result_from_json(const json& j) {
  try {
    SolveResult r;
    r.welfare = extended_from_json(j.at("welfare"));
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.optimal = j.at("optimal").get<bool>();
    r.algorithm = j.at("algorithm").get<std::string>();
    r.outcome = outcome_from_json(j.at("outcome"));
    if (r.outcome.agent_count() != j.at("agents").get<int>()) throw InvalidArgument("agent count mismatch");
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed result JSON: ") + e.what());
  }
}

json to_json(const Deviation& d) {
  json j{{"agent", d.agent + 1},
         {"kind", d.kind == Deviation::Kind::to_singleton ? "to-singleton" : "to-coalition"},
         {"before", to_json(d.before)},
         {"after", to_json(d.after)}};
  if (d.target) j["target"] = *d.target;
  if (auto g = d.gain()) j["gain"] = *g;
  return j;
}

json to_json(const BoundReport& b) {
  json j{{"welfare_diameter_limit", b.welfare_diameter_limit}};
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  j["max_coalition_size_degree"] = opt(b.max_coalition_size_degree);
  j["max_coalition_size_treewidth"] = opt(b.max_coalition_size_treewidth);
  j["stable_diameter_limit"] = opt(b.stable_diameter_limit);
  return j;
}

json to_json(const Certificate& c) {
  json j{{"mode", std::string(to_string(c.mode))},
         {"welfare", to_json(c.welfare)},
         {"individually_rational", c.individually_rational},
         {"nash_stable", c.nash_stable},
         {"bounds", to_json(c.bounds)},
         {"violations", c.violations},
         {"bound_violations", c.bound_violations}};
  json utils = json::array();
  for (const auto& u : c.utilities) utils.push_back(to_json(u));
  j["utilities"] = std::move(utils);
  j["ir_deviation"] = c.ir_deviation ? to_json(*c.ir_deviation) : json(nullptr);
  j["ns_deviation"] = c.ns_deviation ? to_json(*c.ns_deviation) : json(nullptr);
  json cs = json::array();
  for (const auto& cr : c.coalitions) {
    json members = json::array();
    for (Agent a : cr.members) members.push_back(a + 1);
    cs.push_back(json{{"members", members}, {"diameter", to_json(cr.diameter)}, {"welfare", to_json(cr.welfare)}});
  }
  j["coalitions"] = std::move(cs);
  return j;
}

}  // namespace sdg
