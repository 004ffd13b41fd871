#include "sdpabs/predabs.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "sdpabs/error.hpp"

namespace sdpabs {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<Literal> negate_all(const Clause& clause) {
  std::vector<Literal> out;
  for (Literal l : clause) out.push_back(l.negated());
  return out;
}

BddRef leaf_to_bdd(BddManager& bdd, std::uint32_t leaf) {
  std::uint32_t v = leaf / 2;
  if (v >= bdd.num_vars()) throw UnknownLeaf("leaf " + std::to_string(leaf) + " outside P");
  return leaf % 2 == 0 ? bdd.var(v) : bdd.nvar(v);
}

// Primes of `f`, after optionally moving it to a sifted order.
std::vector<Cube> primes_of(BddManager& bdd, BddRef f, const AbstractOptions& options, AbstractionStats& stats) {
  if (!options.sift) {
    stats.bdd_nodes += bdd.size(f);
    return prime_implicants(bdd, f, options.cube_cap);
  }
  BddManager sifted(sift_order(bdd, f), options.node_cap);
  BddRef g = sifted.import(bdd, f);
  stats.bdd_nodes += sifted.size(g);
  return prime_implicants(sifted, g, options.cube_cap);
}

}  // namespace

SymbolicOutcome clause_circuit(Engine& engine, const Clause& clause, SdpOptions sdp) {
  const Problem& problem = engine.problem();
  std::vector<LeafLiteral> g;
  for (std::size_t k = 0; k < problem.predicates.size(); ++k) {
    std::size_t atom = problem.predicates[k];
    g.push_back({Literal{atom, true}, engine.store().mk_leaf(static_cast<std::uint32_t>(2 * k))});
    g.push_back({Literal{atom, false}, engine.store().mk_leaf(static_cast<std::uint32_t>(2 * k + 1))});
  }
  std::vector<Literal> assumed = negate_all(clause);
  return engine.symbolic(g, assumed, sdp);
}

ClauseAbstraction abstract_clause(Engine& engine, const Clause& clause, const AbstractOptions& options) {
  ClauseAbstraction out;
  out.clause = clause;
  const std::size_t n = engine.problem().predicates.size();

  std::vector<Clause> parts;
  if (options.underapprox_disjunction && clause.size() > 1) {
    for (Literal l : clause) parts.push_back(Clause{l});
    out.exact = false;
    out.notes.push_back("clause abstracted literal by literal");
  } else {
    parts.push_back(clause);
  }

  BddManager bdd(n, options.node_cap);
  BddRef f = BddManager::kZero;
  for (const Clause& part : parts) {
    auto t0 = Clock::now();
    SymbolicOutcome sym = clause_circuit(engine, part);
    out.stats.sdp_ms += ms_since(t0);
    out.stats.derivations += sym.derivations;
    out.stats.circuit_nodes += circuit_stats(engine.store(), sym.root).node_count;
    if (!sym.exact) {
      out.exact = false;
      for (const std::string& s : sym.omitted) out.notes.push_back("disjunctive literal omitted: " + s);
    }
    t0 = Clock::now();
    BddRef part_bdd = build_bdd(bdd, engine.store(), sym.root,
                                [&](std::uint32_t leaf) { return leaf_to_bdd(bdd, leaf); });
    f = bdd.lor(f, part_bdd);
    out.stats.bdd_ms += ms_since(t0);
  }
  auto t0 = Clock::now();
  out.primes = primes_of(bdd, f, options, out.stats);
  out.stats.pi_ms += ms_since(t0);
  out.stats.primes = out.primes.size();
  return out;
}

AbstractionResult abstract_formula(const Problem& problem, const AbstractOptions& options) {
  AbstractionResult result;
  std::vector<Clause> clauses = to_cnf(problem.goal, options.cnf_cap);
  result.clauses.resize(clauses.size());

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, clauses.size()));
  if (jobs <= 1) {
    Engine engine(problem, options.engine);
    for (std::size_t i = 0; i < clauses.size(); ++i) result.clauses[i] = abstract_clause(engine, clauses[i], options);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (std::size_t j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        try {
          Engine engine(problem, options.engine);
          for (std::size_t i = j; i < clauses.size(); i += jobs)
            result.clauses[i] = abstract_clause(engine, clauses[i], options);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (std::thread& t : workers) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  const std::size_t n = problem.predicates.size();
  BddManager bdd(n, options.node_cap);
  BddRef f = BddManager::kOne;
  auto t0 = Clock::now();
  for (const ClauseAbstraction& c : result.clauses) {
    f = bdd.land(f, cubes_bdd(bdd, c.primes));
    result.stats.circuit_nodes += c.stats.circuit_nodes;
    result.stats.bdd_nodes += c.stats.bdd_nodes;
    result.stats.derivations += c.stats.derivations;
    result.stats.sdp_ms += c.stats.sdp_ms;
    result.stats.bdd_ms += c.stats.bdd_ms;
    result.stats.pi_ms += c.stats.pi_ms;
    if (!c.exact) {
      result.exact = false;
      result.reasons.insert(result.reasons.end(), c.notes.begin(), c.notes.end());
    }
  }
  result.stats.bdd_ms += ms_since(t0);

  t0 = Clock::now();
  if (result.clauses.size() == 1) {
    result.all_primes = result.clauses.front().primes;
  } else {
    AbstractionStats ignored;
    result.all_primes = primes_of(bdd, f, options, ignored);
  }
  result.stats.pi_ms += ms_since(t0);

  if (options.keep_infeasible) {
    result.cubes = result.all_primes;
  } else {
    Engine engine(problem, options.engine);
    for (const Cube& c : result.all_primes)
      if (cube_feasible(engine, c)) result.cubes.push_back(c);
  }
  result.stats.primes = result.cubes.size();
  return result;
}

std::vector<Literal> cube_literals(const Problem& problem, const Cube& cube) {
  std::vector<Literal> out;
  for (const CubeLiteral& l : cube) out.push_back(Literal{problem.predicates[l.var], l.positive});
  return out;
}

bool cube_feasible(Engine& engine, const Cube& cube) {
  std::vector<Literal> lits = cube_literals(engine.problem(), cube);
  return engine.decide(lits) == Verdict::Sat;
}

std::string cube_text(const Problem& problem, const Cube& cube) {
  return cube_str(cube, [&](std::uint32_t v) { return problem.atoms[problem.predicates[v]].str(); });
}

std::vector<Cube> brute_force_Fp(const Problem& problem, const Formula& goal, std::size_t cap) {
  const std::size_t n = problem.predicates.size();
  if (n > cap) throw CapExceeded("brute force limited to " + std::to_string(cap) + " predicates");
  std::vector<Clause> clauses = to_cnf(goal);
  Engine engine(problem);
  std::vector<Cube> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Cube m;
    for (std::uint32_t k = 0; k < n; ++k) m.push_back({k, ((bits >> k) & 1u) != 0});
    std::vector<Literal> lits = cube_literals(problem, m);
    bool implies = true;
    for (const Clause& c : clauses) {
      std::vector<Literal> query = lits;
      for (Literal l : c) query.push_back(l.negated());
      if (engine.decide(query) == Verdict::Sat) {
        implies = false;
        break;
      }
    }
    if (implies) out.push_back(std::move(m));
  }
  return out;
}

bool check_implies_goal(const Problem& problem, const std::vector<Cube>& cubes, const Formula& goal) {
  std::vector<Clause> clauses = to_cnf(goal);
  Engine engine(problem);
  for (const Cube& cube : cubes) {
    std::vector<Literal> lits = cube_literals(problem, cube);
    for (const Clause& c : clauses) {
      std::vector<Literal> query = lits;
      for (Literal l : c) query.push_back(l.negated());
      if (engine.decide(query) == Verdict::Sat) return false;
    }
  }
  return true;
}

Verdict check_problem(const Problem& problem) {
  Engine engine(problem);
  std::vector<Literal> base;
  for (std::size_t atom : problem.predicates) base.push_back(Literal{atom, true});
  for (const Clause& term : to_dnf(problem.goal)) {
    std::vector<Literal> lits = base;
    lits.insert(lits.end(), term.begin(), term.end());
    if (engine.decide(lits) == Verdict::Sat) return Verdict::Sat;
  }
  return Verdict::Unsat;
}

}  // namespace sdpabs
