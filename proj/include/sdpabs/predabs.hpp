#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sdpabs/bdd.hpp"
#include "sdpabs/cnf.hpp"
#include "sdpabs/cube.hpp"
#include "sdpabs/engine.hpp"
#include "sdpabs/syntax.hpp"

namespace sdpabs {

struct AbstractOptions {
  /// Abstract each goal clause as the disjunction of its literals'
  /// abstractions (weaker, flagged inexact).
  bool underapprox_disjunction = false;
  /// Report prime implicants that are themselves unsatisfiable.
  bool keep_infeasible = false;
  bool sift = false;
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t cube_cap = kDefaultCubeCap;
  std::size_t cnf_cap = kDefaultCnfCap;
  std::size_t jobs = 1;
  EngineOptions engine;
};

struct AbstractionStats {
  std::size_t circuit_nodes = 0;
  std::size_t bdd_nodes = 0;
  std::size_t primes = 0;
  std::size_t derivations = 0;
  double sdp_ms = 0;
  double bdd_ms = 0;
  double pi_ms = 0;
};

/// Cubes use variable k for the k-th predicate of P.
struct ClauseAbstraction {
  Clause clause;
  std::vector<Cube> primes;
  bool exact = true;
  std::vector<std::string> notes;
  AbstractionStats stats;
};

struct AbstractionResult {
  std::vector<ClauseAbstraction> clauses;
  /// Prime implicants of the conjunction of the clause abstractions.
  std::vector<Cube> all_primes;
  /// all_primes without the unsatisfiable ones (unless kept by option).
  std::vector<Cube> cubes;
  bool exact = true;
  std::vector<std::string> reasons;
  AbstractionStats stats;
};

/// Weakest cover over P of the disjunction `clause`, as prime implicants.
/// Unsatisfiable minterms count as implying the clause.
ClauseAbstraction abstract_clause(Engine& engine, const Clause& clause, const AbstractOptions& options = {});

/// The circuit whose truth on a subset of P and its negations means the
/// subset refutes the negated clause, with leaf 2k for p_k and 2k+1 for !p_k.
SymbolicOutcome clause_circuit(Engine& engine, const Clause& clause, SdpOptions sdp = {});

/// CNF of the goal, one abstraction per clause, conjoined.
AbstractionResult abstract_formula(const Problem& problem, const AbstractOptions& options = {});

/// Minterms over P that imply `goal`, by one validity query per minterm and
/// goal clause. Throws CapExceeded when |P| > cap.
std::vector<Cube> brute_force_Fp(const Problem& problem, const Formula& goal, std::size_t cap = 16);

/// Every cube implies every CNF clause of `goal`.
bool check_implies_goal(const Problem& problem, const std::vector<Cube>& cubes, const Formula& goal);

bool cube_feasible(Engine& engine, const Cube& cube);

/// Satisfiability of every predicate of P together with the goal.
Verdict check_problem(const Problem& problem);

std::vector<Literal> cube_literals(const Problem& problem, const Cube& cube);

/// Literals in P-order, `true` for the empty cube.
std::string cube_text(const Problem& problem, const Cube& cube);

/// Chain of n diamonds: a_i=b_i, b_i=d_i, a_i=c_i, c_i=d_i per diamond and
/// d_i=a_{i+1} between neighbours; goal a_1 = d_n.
Problem gen_diamond(std::size_t n);
std::string diamond_text(std::size_t n);

}  // namespace sdpabs
