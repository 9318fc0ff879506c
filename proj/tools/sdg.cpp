// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The sdg authors

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdg/bounds.hpp"
#include "sdg/errors.hpp"
#include "sdg/generators.hpp"
#include "sdg/io.hpp"
#include "sdg/reductions.hpp"
#include "sdg/solver.hpp"

using nlohmann::json;
using namespace sdg;

namespace {

enum Exit { kOk = 0, kError = 1, kNoStable = 2, kDisagree = 3 };

struct RunConfig {
  std::string graph;
  std::string scores;
  std::string tail = "closed";
  std::string mode = "welfare";
  std::string algo = "auto";
  std::optional<int> sz;
  std::string td;
  std::string format = "human";
};

void add_instance_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--graph", cfg.graph, ".gr file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--scores", cfg.scores, "comma-separated scores, e.g. \"1,0,-1\"")->required();
  cmd->add_option("--tail", cfg.tail, "closed or open")->check(CLI::IsMember({"closed", "open"}));
}

std::string coalitions_1(const Outcome& pi) {
  std::string out;
  for (const auto& c : pi.coalitions()) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + std::to_string(c[k] + 1);
    out += '}';
  }
  return out;
}

std::string utilities_line(const std::vector<ExtendedValue>& u) {
  std::string out;
  for (size_t i = 0; i < u.size(); ++i) out += (i ? " " : "") + std::to_string(i + 1) + ":" + u[i].to_string();
  return out;
}

void print_certificate(std::ostream& os, const Certificate& c) {
  os << "welfare: " << c.welfare.to_string() << "\n";
  os << "utilities: " << utilities_line(c.utilities) << "\n";
  os << "IR: " << (c.individually_rational ? "true" : "false");
  if (c.ir_deviation) os << " (" << c.ir_deviation->to_string() << ")";
  os << "\nNS: " << (c.nash_stable ? "true" : "false");
  if (c.ns_deviation) os << " (" << c.ns_deviation->to_string() << ")";
  os << "\n";
  for (size_t k = 0; k < c.coalitions.size(); ++k)
    os << "coalition " << k + 1 << ": size " << c.coalitions[k].members.size() << ", diameter "
       << c.coalitions[k].diameter.to_string() << ", welfare " << c.coalitions[k].welfare.to_string() << "\n";
  for (const auto& v : c.violations) os << "violation: " << v << "\n";
  for (const auto& v : c.bound_violations) os << "bound: " << v << "\n";
}

int run_solve(const RunConfig& cfg) {
  const auto g = read_graph(read_file(cfg.graph));
  const auto s = ScoringVector::parse(cfg.scores, parse_tail(cfg.tail));
  const Mode mode = parse_mode(cfg.mode);
  SolveOptions opts;
  opts.algorithm = parse_algorithm(cfg.algo);
  opts.sz = cfg.sz;
  if (!cfg.td.empty()) opts.td = read_td(read_file(cfg.td));
  if (opts.algorithm == Algorithm::twdp && s.tail() == Tail::open)
    throw Unsupported("twdp handles closed scoring vectors only; use --algo fptdp, vc or brute with --tail open");

  const auto report = solve(s, g, mode, opts);
  for (size_t k = 0; k < report.components.size(); ++k) {
    const auto& cr = report.components[k];
    if (opts.algorithm != Algorithm::automatic) continue;
    const bool fallback = cr.algorithm == Algorithm::brute && cr.agents.size() > 10;
    std::cerr << (fallback ? "warning: " : "note: ") << "component " << k + 1 << " (" << cr.agents.size()
              << " agents): " << to_string(cr.algorithm) << ", " << cr.reason << "\n";
  }

  if (cfg.format == "json") {
    json j{{"seconds", report.seconds}};
    json comps = json::array();
    for (const auto& cr : report.components) {
      json agents = json::array();
      for (Agent a : cr.agents) agents.push_back(a + 1);
      comps.push_back(json{{"agents", agents},
                           {"algorithm", std::string(to_string(cr.algorithm))},
                           {"reason", cr.reason},
                           {"seconds", cr.seconds}});
    }
    j["components"] = std::move(comps);
    if (report.result) {
      j["result"] = to_json(*report.result);
      j["certificate"] = to_json(certify_outcome(s, g, report.result->outcome, mode));
    } else {
      j["result"] = nullptr;
      j["certificate"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else if (report.result) {
    const auto& r = *report.result;
    std::cout << "algorithm: " << r.algorithm << "\n";
    std::cout << "mode: " << to_string(r.mode) << "\n";
    std::cout << "optimal: " << (r.optimal ? "true" : "false (coalition size cap below every valid bound)") << "\n";
    std::cout << "outcome: " << coalitions_1(r.outcome) << "\n";
    print_certificate(std::cout, certify_outcome(s, g, r.outcome, mode));
    std::cout << "time: " << report.seconds << " s\n";
  } else {
    std::cout << "no Nash stable outcome";
    if (cfg.sz) std::cout << " with coalitions of at most " << *cfg.sz << " agents";
    std::cout << "\n";
    std::cout << "time: " << report.seconds << " s\n";
  }
  return report.result ? kOk : kNoStable;
}

int run_check(const RunConfig& cfg, const std::string& outcome_path) {
  const auto g = read_graph(read_file(cfg.graph));
  const auto s = ScoringVector::parse(cfg.scores, parse_tail(cfg.tail));
  const Mode mode = parse_mode(cfg.mode);
  const auto pi = read_outcome(read_file(outcome_path), g.size());
  const auto c = certify_outcome(s, g, pi, mode);
  if (cfg.format == "json") {
    std::cout << json{{"outcome", to_json(pi)}, {"certificate", to_json(c)}}.dump(2) << "\n";
  } else {
    std::cout << "outcome: " << coalitions_1(pi) << "\n";
    print_certificate(std::cout, c);
    std::cout << "mode " << to_string(mode) << ": " << (c.satisfied() ? "satisfied" : "violated") << "\n";
  }
  return kOk;
}

int run_bounds(const RunConfig& cfg) {
  const auto g = read_graph(read_file(cfg.graph));
  const auto s = ScoringVector::parse(cfg.scores, parse_tail(cfg.tail));
  const auto cd = compute_decomposition(g);
  const int width = cd.decomposition.width();
  const auto b = bound_report(s, g.max_degree(), std::max(width, 0));
  const auto sz = select_sz(s, g);
  std::optional<int> cover;
  try {
    cover = static_cast<int>(compute_vertex_cover(g).size());
  } catch (const ResourceLimit&) {
  }
  std::string reason;
  const Algorithm auto_algo = select_algorithm(s, g, Mode::welfare, &reason);
  if (cfg.format == "json") {
    json j{{"agents", g.size()},
           {"max_degree", g.max_degree()},
           {"width", width},
           {"width_exact", cd.exact},
           {"bounds", to_json(b)},
           {"select_sz", sz ? json(*sz) : json(nullptr)},
           {"vertex_cover", cover ? json(*cover) : json(nullptr)},
           {"auto", std::string(to_string(auto_algo))}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  std::cout << "agents: " << g.size() << "\n";
  std::cout << "max degree: " << g.max_degree() << "\n";
  std::cout << "decomposition width: " << width << (cd.exact ? " (exact)" : " (upper bound)") << "\n";
  std::cout << "vertex cover: " << opt(cover) << "\n";
  std::cout << "coalition size bound (degree): " << opt(b.max_coalition_size_degree) << "\n";
  std::cout << "coalition size bound (treewidth): " << opt(b.max_coalition_size_treewidth) << "\n";
  std::cout << "stable diameter limit: " << opt(b.stable_diameter_limit) << "\n";
  std::cout << "welfare diameter limit: " << b.welfare_diameter_limit << "\n";
  std::cout << "select_sz: " << opt(sz) << "\n";
  std::cout << "auto (connected input): " << to_string(auto_algo) << ", " << reason << "\n";
  return kOk;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
}

struct GenConfig {
  std::string kind;
  int n = 9;
  int tw = 2;
  double keep = 0.6;
  int max_deg = 3;
  double p = 0.5;
  std::string formula;
  int variables = 3;
  int clauses = 2;
  std::string scores = "1";
  std::string out;
  std::uint64_t seed = 1;
};

int run_gen(const GenConfig& gc) {
  std::mt19937_64 rng(gc.seed);
  if (gc.kind == "random-tw") {
    if (gc.n < 1 || gc.tw < 1) throw InvalidArgument("--n and --tw must be positive");
    const auto g = random_partial_ktree(gc.n, gc.tw, gc.keep, rng);
    const int w = compute_decomposition(g).decomposition.width();
    if (w > gc.tw) throw std::logic_error("generated graph has width " + std::to_string(w));
    emit(gc.out, write_graph(g, {"random partial " + std::to_string(gc.tw) + "-tree, seed " + std::to_string(gc.seed),
                                 "decomposition width " + std::to_string(w)}));
    return kOk;
  }
  if (gc.kind == "random-degree") {
    if (gc.n < 1 || gc.max_deg < 0) throw InvalidArgument("--n must be positive and --max-deg non-negative");
    const auto g = random_bounded_degree(gc.n, gc.max_deg, gc.p, true, rng);
    if (g.max_degree() > gc.max_deg) throw std::logic_error("generated graph exceeds the degree cap");
    emit(gc.out, write_graph(g, {"random graph, max degree " + std::to_string(gc.max_deg) + ", seed " +
                                 std::to_string(gc.seed)}));
    return kOk;
  }
  if (gc.kind == "nae") {
    emit(gc.out, random_nae_formula(gc.variables, gc.clauses, rng).to_dimacs());
    return kOk;
  }
  // hard
  const NaeFormula phi = gc.formula.empty() ? random_nae_formula(gc.variables, gc.clauses, rng)
                                            : NaeFormula::parse(read_file(gc.formula));
  const auto s = ScoringVector::parse(gc.scores, Tail::closed);
  const auto inst = ctcg_to_sdg(nae_to_3ctcg(phi), s);
  emit(gc.out, write_graph(inst.network, {"hard instance from an NAE-3-SAT formula", "scores " + s.to_string(),
                                          "target " + std::to_string(inst.target)}));
  if (!gc.out.empty()) std::cout << "target: " << inst.target << "\n";
  return kOk;
}

// --- bench ---

struct Cell {
  bool ran = false;
  std::string skipped;  // reason, when not ran
  std::optional<SolveResult> result;
  bool certified = true;
  double seconds = 0;
};

Cell run_cell(Algorithm a, const ScoringVector& s, const SocialNetwork& g, Mode mode) {
  Cell cell;
  SolveOptions opts;
  opts.algorithm = a;
  try {
    if (a == Algorithm::twdp && s.tail() == Tail::open) throw Unsupported("open tail");
    const auto rep = solve(s, g, mode, opts);
    cell.ran = true;
    cell.result = rep.result;
    cell.seconds = rep.seconds;
    if (rep.result) cell.certified = satisfies(s, g, rep.result->outcome, mode) &&
                                     social_welfare(s, g, rep.result->outcome) == rep.result->welfare;
  } catch (const ResourceLimit& e) {
    cell.skipped = e.what();
  } catch (const Unsupported& e) {
    cell.skipped = e.what();
  }
  return cell;
}

// Empty when all ran algorithms agree and certify.
std::string disagreement(const std::vector<Algorithm>& algos, const std::vector<Cell>& cells) {
  const Cell* ref = nullptr;
  Algorithm ref_algo{};
  for (size_t k = 0; k < cells.size(); ++k) {
    const Cell& c = cells[k];
    if (!c.ran) continue;
    if (!c.certified) return std::string(to_string(algos[k])) + " returned an outcome failing the certifier";
    if (!ref) {
      ref = &c;
      ref_algo = algos[k];
      continue;
    }
    const bool same = c.result.has_value() == ref->result.has_value() &&
                      (!c.result || c.result->welfare == ref->result->welfare);
    if (!same) {
      auto w = [](const Cell& x) { return x.result ? x.result->welfare.to_string() : std::string("none"); };
      return std::string(to_string(ref_algo)) + " welfare " + w(*ref) + " vs " + std::string(to_string(algos[k])) +
             " welfare " + w(c);
    }
  }
  return {};
}

// Greedily drops agents while some pair of algorithms still disagrees.
SocialNetwork shrink(const SocialNetwork& g0, const ScoringVector& s, Mode mode, const std::vector<Algorithm>& algos) {
  SocialNetwork g = g0;
  bool progress = true;
  while (progress && g.size() > 1) {
    progress = false;
    for (Agent v = 0; v < g.size(); ++v) {
      std::vector<Agent> keep;
      for (Agent u = 0; u < g.size(); ++u)
        if (u != v) keep.push_back(u);
      const auto h = g.induced(keep);
      std::vector<Cell> cells;
      for (Algorithm a : algos) cells.push_back(run_cell(a, s, h, mode));
      if (!disagreement(algos, cells).empty()) {
        g = h;
        progress = true;
        break;
      }
    }
  }
  return g;
}

struct BenchConfig {
  std::vector<std::string> corpus;
  std::string scores;
  std::string tail = "closed";
  std::string modes = "welfare";
  std::string algos = "brute,twdp,fptdp,vc";
  std::string dump = "bench_failure.gr";
  std::string format = "human";
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int run_bench(const BenchConfig& bc) {
  namespace fs = std::filesystem;
  const auto s = ScoringVector::parse(bc.scores, parse_tail(bc.tail));
  std::vector<Mode> modes;
  for (const auto& m : split(bc.modes)) modes.push_back(parse_mode(m));
  std::vector<Algorithm> algos;
  for (const auto& a : split(bc.algos)) {
    const Algorithm algo = parse_algorithm(a);
    if (algo == Algorithm::automatic) throw InvalidArgument("bench compares concrete algorithms; drop 'auto'");
    algos.push_back(algo);
  }
  std::vector<fs::path> files;
  for (const auto& dir : bc.corpus) {
    if (!fs::is_directory(dir)) throw InvalidArgument("corpus '" + dir + "' is not a directory");
    std::vector<fs::path> here;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".gr") here.push_back(e.path());
    std::sort(here.begin(), here.end());
    files.insert(files.end(), here.begin(), here.end());
  }

  struct Task {
    size_t file;
    Mode mode;
    SocialNetwork g;
    std::vector<Cell> cells;
    std::string problem;
  };
  std::vector<Task> tasks;
  for (size_t f = 0; f < files.size(); ++f) {
    const auto g = read_graph(read_file(files[f].string()));
    for (Mode m : modes) tasks.push_back({f, m, g, {}, {}});
  }

  // Each task writes only its own slot; printing happens afterwards in order.
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < static_cast<long>(tasks.size()); ++t) {
    Task& task = tasks[t];
    try {
      for (Algorithm a : algos) task.cells.push_back(run_cell(a, s, task.g, task.mode));
      task.problem = disagreement(algos, task.cells);
    } catch (const std::exception& e) {
      task.problem = std::string("error: ") + e.what();
    }
  }

  json rows = json::array();
  if (bc.format == "human") {
    std::cout << "instance\tmode";
    for (Algorithm a : algos) std::cout << "\t" << to_string(a) << "\t" << to_string(a) << "_s";
    std::cout << "\n";
  }
  const Task* failed = nullptr;
  for (const auto& task : tasks) {
    const std::string name = files[task.file].filename().string();
    json row{{"instance", name}, {"mode", std::string(to_string(task.mode))}};
    if (bc.format == "human") std::cout << name << "\t" << to_string(task.mode);
    for (size_t k = 0; k < task.cells.size(); ++k) {
      const Cell& c = task.cells[k];
      std::string w = !c.ran ? "skipped" : c.result ? c.result->welfare.to_string() : "none";
      if (bc.format == "human") std::cout << "\t" << w << "\t" << (c.ran ? std::to_string(c.seconds) : "-");
      row[std::string(to_string(algos[k]))] =
          json{{"welfare", w}, {"seconds", c.seconds}, {"skipped", c.skipped}};
    }
    if (bc.format == "human") std::cout << "\n";
    rows.push_back(row);
    if (!task.problem.empty() && !failed) failed = &task;
  }
  if (bc.format == "json") std::cout << rows.dump(2) << "\n";
  if (!failed) return kOk;

  const std::string name = files[failed->file].filename().string();
  std::cerr << "disagreement on " << name << " (" << to_string(failed->mode) << "): " << failed->problem << "\n";
  const auto small = shrink(failed->g, s, failed->mode, algos);
  write_file(bc.dump, write_graph(small, {"shrunk from " + name, "scores " + s.to_string() + " tail " +
                                                                    std::string(to_string(s.tail())),
                                          "mode " + std::string(to_string(failed->mode))}));
  std::cerr << "instance with " << small.size() << " agents written to " << bc.dump << "\n";
  return kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for score-based social distance games"};
  app.require_subcommand(1);

  RunConfig solve_cfg;
  auto* solve_cmd = app.add_subcommand("solve", "find an optimal outcome");
  add_instance_flags(solve_cmd, solve_cfg);
  solve_cmd->add_option("--mode", solve_cfg.mode, "welfare, ir or ns")->check(CLI::IsMember({"welfare", "ir", "ns"}));
  solve_cmd->add_option("--algo", solve_cfg.algo, "auto, brute, twdp, fptdp or vc")
      ->check(CLI::IsMember({"auto", "brute", "twdp", "fptdp", "vc"}));
  solve_cmd->add_option("--sz", solve_cfg.sz, "coalition size cap for fptdp")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--td", solve_cfg.td, ".td tree decomposition")->check(CLI::ExistingFile);
  solve_cmd->add_option("--format", solve_cfg.format)->check(CLI::IsMember({"human", "json"}));

  RunConfig check_cfg;
  std::string outcome_path;
  auto* check_cmd = app.add_subcommand("check", "certify an outcome");
  add_instance_flags(check_cmd, check_cfg);
  check_cmd->add_option("--outcome", outcome_path, ".out file")->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--mode", check_cfg.mode)->check(CLI::IsMember({"welfare", "ir", "ns"}));
  check_cmd->add_option("--format", check_cfg.format)->check(CLI::IsMember({"human", "json"}));

  RunConfig bounds_cfg;
  auto* bounds_cmd = app.add_subcommand("bounds", "structural parameters and coalition bounds");
  add_instance_flags(bounds_cmd, bounds_cfg);
  bounds_cmd->add_option("--format", bounds_cfg.format)->check(CLI::IsMember({"human", "json"}));

  GenConfig gc;
  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->add_option("kind", gc.kind, "hard, random-tw, random-degree or nae")
      ->required()
      ->check(CLI::IsMember({"hard", "random-tw", "random-degree", "nae"}));
  gen_cmd->add_option("--n", gc.n, "agents");
  gen_cmd->add_option("--tw", gc.tw, "partial k-tree width");
  gen_cmd->add_option("--keep", gc.keep, "edge keep probability (random-tw)")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--max-deg", gc.max_deg, "degree cap (random-degree)");
  gen_cmd->add_option("--p", gc.p, "edge probability (random-degree)")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--formula", gc.formula, "NAE-3-SAT file (hard)")->check(CLI::ExistingFile);
  gen_cmd->add_option("--vars", gc.variables, "variables of a random formula");
  gen_cmd->add_option("--clauses", gc.clauses, "clauses of a random formula");
  gen_cmd->add_option("--scores", gc.scores, "one score s1 for the hard instance");
  gen_cmd->add_option("--out", gc.out, "output file (default stdout)");
  gen_cmd->add_option("--seed", gc.seed);

  BenchConfig bc;
  auto* bench_cmd = app.add_subcommand("bench", "run algorithms on a corpus and compare");
  bench_cmd->add_option("--corpus", bc.corpus, "directory of .gr files; repeatable")->required();
  bench_cmd->add_option("--scores", bc.scores)->required();
  bench_cmd->add_option("--tail", bc.tail)->check(CLI::IsMember({"closed", "open"}));
  bench_cmd->add_option("--modes", bc.modes, "comma-separated modes");
  bench_cmd->add_option("--algos", bc.algos, "comma-separated algorithms");
  bench_cmd->add_option("--dump", bc.dump, "where to write a failing instance");
  bench_cmd->add_option("--format", bc.format)->check(CLI::IsMember({"human", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (*solve_cmd) return run_solve(solve_cfg);
    if (*check_cmd) return run_check(check_cfg, outcome_path);
    if (*bounds_cmd) return run_bounds(bounds_cfg);
    if (*gen_cmd) return run_gen(gc);
    if (*bench_cmd) return run_bench(bc);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
  } catch (const ResourceLimit& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
  } catch (const PreconditionViolated& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
