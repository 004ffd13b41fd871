#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdpabs/error.hpp"
#include "sdpabs/parser.hpp"
#include "sdpabs/predabs.hpp"
#include "sdpabs/testing.hpp"

namespace {

using namespace sdpabs;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kCap = 3 };

struct RunConfig {
  std::string problem_path;
  std::string goal_path;
  bool json = false;
  std::string dot_path;
  bool underapprox = false;
  bool keep_infeasible = false;
  std::string order = "input";
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t cube_cap = kDefaultCubeCap;
  std::size_t jobs = 1;
  std::size_t max_n = 10;
  std::uint64_t seed = 0;
  bool full = false;
  bool verbose = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Problem load(const RunConfig& cfg, bool need_goal) {
  ParseOptions po;
  po.require_goal = need_goal && cfg.goal_path.empty();
  Problem p = parse_problem(slurp(cfg.problem_path), po);
  if (!cfg.goal_path.empty()) parse_goal_into(slurp(cfg.goal_path), p);
  return p;
}

double ms(double v) { return std::round(v * 1000.0) / 1000.0; }

std::string leaf_label(const Problem& p, std::uint32_t leaf) {
  std::string atom = p.atoms[p.predicates[leaf / 2]].str();
  return leaf % 2 ? "!" + atom : atom;
}

void write_goal_circuit(const Problem& p, const AbstractOptions& opts, const std::string& path) {
  Engine engine(p, opts.engine);
  std::vector<CircuitRef> roots;
  for (const Clause& c : to_cnf(p.goal, opts.cnf_cap)) roots.push_back(clause_circuit(engine, c).root);
  CircuitRef root = engine.store().mk_and(std::move(roots));
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_dot(out, engine.store(), root, [&](std::uint32_t leaf) { return leaf_label(p, leaf); });
}

int cmd_abstract(const RunConfig& cfg) {
  Problem p = load(cfg, true);
  AbstractOptions opts;
  opts.underapprox_disjunction = cfg.underapprox;
  opts.keep_infeasible = cfg.keep_infeasible;
  opts.sift = cfg.order == "sift";
  opts.node_cap = cfg.node_cap;
  opts.cube_cap = cfg.cube_cap;
  opts.jobs = cfg.jobs;
  AbstractionResult r = abstract_formula(p, opts);
  if (!cfg.dot_path.empty()) write_goal_circuit(p, opts, cfg.dot_path);

  if (cfg.json) {
    json cubes = json::array();
    for (const Cube& c : r.cubes) {
      json lits = json::array();
      for (const CubeLiteral& l : c) {
        std::string atom = p.atoms[p.predicates[l.var]].str();
        lits.push_back(l.positive ? atom : "!" + atom);
      }
      cubes.push_back(lits);
    }
    json out;
    out["cubes"] = cubes;
    out["exact"] = r.exact;
    if (!r.reasons.empty()) out["reasons"] = r.reasons;
    out["stats"] = {{"circuit_nodes", r.stats.circuit_nodes},
                    {"bdd_nodes", r.stats.bdd_nodes},
                    {"primes", r.stats.primes},
                    {"time_ms", {{"sdp", ms(r.stats.sdp_ms)}, {"bdd", ms(r.stats.bdd_ms)}, {"pi", ms(r.stats.pi_ms)}}}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  if (r.cubes.empty()) std::cout << "false\n";
  for (const Cube& c : r.cubes) std::cout << cube_text(p, c) << "\n";
  if (!r.exact)
    for (const std::string& why : r.reasons) std::cerr << "inexact: " << why << "\n";
  if (cfg.verbose)
    std::cerr << "circuit nodes " << r.stats.circuit_nodes << ", bdd nodes " << r.stats.bdd_nodes << ", primes "
              << r.all_primes.size() << " (" << r.cubes.size() << " satisfiable)\n";
  return kOk;
}

int cmd_check(const RunConfig& cfg) {
  std::cout << (check_problem(load(cfg, false)) == Verdict::Sat ? "sat" : "unsat") << "\n";
  return kOk;
}

int cmd_bench(const RunConfig& cfg) {
  std::printf("%4s %5s %8s %12s\n", "n", "|P|", "primes", "time_ms");
  bool ok = true;
  for (std::size_t n = 1; n <= cfg.max_n; ++n) {
    Problem p = gen_diamond(n);
    AbstractOptions opts;
    opts.sift = cfg.order == "sift";
    opts.node_cap = cfg.node_cap;
    opts.cube_cap = cfg.cube_cap;
    auto t0 = std::chrono::steady_clock::now();
    AbstractionResult r = abstract_formula(p, opts);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool good = r.cubes.size() == (std::size_t{1} << n);
    ok = ok && good;
    std::printf("%4zu %5zu %8zu %12.1f%s\n", n, p.predicates.size(), r.cubes.size(), ms, good ? "" : "  expected 2^n");
    std::fflush(stdout);
  }
  return ok ? kOk : kFailure;
}

int cmd_selftest(const RunConfig& cfg) {
  testing::SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.quick = !cfg.full;
  int failed = 0;
  for (int id = 1; id <= 9; ++id) {
    testing::CriterionReport rep = testing::run_criterion(id, opts);
    std::printf("[%s] %d %s: %s\n", rep.passed ? "PASS" : "FAIL", rep.id, rep.title.c_str(), rep.detail.c_str());
    std::fflush(stdout);
    failed += !rep.passed;
  }
  return failed ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Predicate abstraction by symbolic decision procedures"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto caps = [&](CLI::App* sub) {
    sub->add_option("--node-cap", cfg.node_cap, "BDD node limit")->check(CLI::PositiveNumber);
    sub->add_option("--cube-cap", cfg.cube_cap, "prime implicant limit")->check(CLI::PositiveNumber);
    sub->add_option("--order", cfg.order, "BDD variable order")->check(CLI::IsMember({"input", "sift"}));
  };

  auto* abstract = app.add_subcommand("abstract", "Compute the abstraction of a goal over predicates P");
  abstract->add_option("-p,--problem", cfg.problem_path, "problem file")->required()->check(CLI::ExistingFile);
  abstract->add_option("-g,--goal", cfg.goal_path, "separate goal file")->check(CLI::ExistingFile);
  abstract->add_flag("--json", cfg.json, "print JSON");
  abstract->add_option("--dot", cfg.dot_path, "write the goal circuit in DOT format");
  abstract->add_flag("--underapprox-disjunction", cfg.underapprox, "abstract clause literals separately");
  abstract->add_flag("--keep-infeasible", cfg.keep_infeasible, "also report unsatisfiable prime implicants");
  abstract->add_option("--jobs", cfg.jobs, "clauses abstracted in parallel")->check(CLI::PositiveNumber);
  abstract->add_flag("-v,--verbose", cfg.verbose, "print statistics to stderr");
  caps(abstract);

  auto* check = app.add_subcommand("check", "Decide the conjunction of P and the goal");
  check->add_option("-p,--problem", cfg.problem_path, "problem file")->required()->check(CLI::ExistingFile);

  auto* bench = app.add_subcommand("bench", "Diamond benchmark");
  auto* diamond = bench->add_subcommand("diamond", "chains of n diamonds");
  bench->require_subcommand(1);
  diamond->add_option("--max-n", cfg.max_n, "largest chain")->check(CLI::Range(1, 30));
  caps(diamond);

  auto* selftest = app.add_subcommand("selftest", "Run the oracle suites");
  selftest->add_option("--seed", cfg.seed, "random seed");
  selftest->add_flag("--full", cfg.full, "full-size corpora");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*abstract) return cmd_abstract(cfg);
    if (*check) return cmd_check(cfg);
    if (*bench) return cmd_bench(cfg);
    if (*selftest) return cmd_selftest(cfg);
  } catch (const ParseError& e) {
    std::cerr << cfg.problem_path << ":" << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedAtom& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kParse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
