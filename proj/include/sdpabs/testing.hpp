#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sdpabs/predicate.hpp"
#include "sdpabs/syntax.hpp"

namespace sdpabs::testing {

using Rng = std::mt19937_64;

/// A set of purified facts G and goal facts E over their own tables.
struct FactInstance {
  TermTable terms;
  PredicateTable preds;
  std::vector<PredId> g;
  std::vector<PredId> e;
};

struct EufShape {
  std::size_t vars = 4;
  std::size_t g_min = 1;
  std::size_t g_max = 10;
  std::size_t e_max = 2;
  bool binary = true;  // also a binary function symbol
};

struct DifShape {
  std::size_t vars = 5;
  std::size_t g_min = 1;
  std::size_t g_max = 10;
  std::size_t e_max = 2;
  int c_max = 4;
  bool zero = true;  // allow comparisons against constants (x0)
};

FactInstance random_euf(Rng& rng, const EufShape& shape = {});
FactInstance random_dif(Rng& rng, const DifShape& shape = {});

/// Negations of `e`, interned.
std::vector<PredId> negated(PredicateTable& preds, const std::vector<PredId>& e);

struct ProblemShape {
  std::size_t vars = 3;
  std::size_t preds_min = 1;
  std::size_t preds_max = 8;
  std::size_t goal_max = 2;
  bool euf = true;
  bool dif = true;
  bool mixed_atoms = true;   // function applications inside arithmetic atoms
  bool dif_equalities = true;
  int c_max = 1;
};

/// Random problem in the input language whose goal is a clause.
Problem random_problem(Rng& rng, const ProblemShape& shape = {});

/// Random formula over atoms 0..atoms-1 with at most `size` connectives.
Formula random_formula(Rng& rng, std::size_t atoms, std::size_t size);

/// Satisfiability of a conjunction of literals by model search: every term
/// is placed into an ordered partition consistent with congruence and the
/// (dis)equalities, then difference constraints are checked per ordering.
bool semantic_sat(const Problem& problem, const std::vector<Literal>& literals);

/// Near-complete equality graph over x1..xn without the edge x1 = xn; the
/// chain x1 = x2, ..., x(n-1) = xn is its first n-1 predicates.
FactInstance near_complete_graph(std::size_t n);

struct CriterionReport {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  bool quick = false;  // smaller corpora, used by the CLI selftest
};

/// One routine per acceptance criterion, 1..9.
CriterionReport run_criterion(int id, const SuiteOptions& options);

}  // namespace sdpabs::testing
