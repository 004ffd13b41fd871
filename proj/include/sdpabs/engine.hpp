#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sdpabs/circuit.hpp"
#include "sdpabs/lowering.hpp"
#include "sdpabs/nelson_oppen.hpp"
#include "sdpabs/saturation.hpp"
#include "sdpabs/sdp.hpp"
#include "sdpabs/syntax.hpp"

namespace sdpabs {

/// Decides a conjunction of purified facts with the procedure its theories
/// call for: EUF or difference logic alone, or their combination.
Verdict decide_facts(const TermTable& terms, PredicateTable& preds, std::span<const PredId> facts,
                     bool stop_at_fixpoint = false, TheoryOptions theory = {});

struct SymbolicRun {
  CircuitRef root = CircuitStore::kFalse;
  std::size_t derivations = 0;
  std::size_t iterations = 0;  // single-theory runs; combination rounds otherwise
};

/// Symbolic counterpart of decide_facts. `options` applies to single-theory
/// inputs only.
SymbolicRun symbolic_facts(CircuitStore& store, const TermTable& terms, PredicateTable& preds,
                           std::span<const Seed> seeds, SdpOptions options = {}, TheoryOptions theory = {});

struct EngineOptions {
  /// Largest number of case splits over disjunctive literals before they are
  /// dropped (sound under-approximation).
  std::size_t case_cap = 4096;
  /// Concrete checks stop at the saturation fixpoint.
  bool stop_at_fixpoint = true;
  TheoryOptions theory;
};

/// A literal contributing facts under a circuit leaf.
struct LeafLiteral {
  Literal literal;
  CircuitRef leaf;
};

struct SymbolicOutcome {
  CircuitRef root = CircuitStore::kFalse;
  bool exact = true;
  std::vector<std::string> omitted;  // disjunctive literals left out
  std::size_t cases = 1;
  std::size_t derivations = 0;
};

/// Per-problem state: interned terms and predicates, the purification of
/// every atom in both polarities, and the circuit store.
class Engine {
 public:
  explicit Engine(const Problem& problem, EngineOptions options = {});
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const Problem& problem() const { return problem_; }
  TermTable& terms() { return terms_; }
  PredicateTable& preds() { return preds_; }
  CircuitStore& store() { return store_; }
  const Lowering& lowering() const { return lowering_; }
  const EngineOptions& options() const { return options_; }

  const LoweredLiteral& lower(Literal l) const;
  std::span<const PredId> bindings() const { return bindings_; }

  /// Satisfiability of a conjunction of literals.
  Verdict decide(std::span<const Literal> literals);

  /// Circuit over the leaves of `g` that is true exactly on the subsets G'
  /// for which G' together with `assumed` is unsatisfiable.
  SymbolicOutcome symbolic(std::span<const LeafLiteral> g, std::span<const Literal> assumed,
                           SdpOptions options = {});

 private:
  Problem problem_;
  EngineOptions options_;
  TermTable terms_;
  PredicateTable preds_;
  Lowering lowering_;
  CircuitStore store_;
  std::vector<LoweredLiteral> lowered_;  // 2 * atom + (negative ? 1 : 0)
  std::vector<PredId> bindings_;
};

}  // namespace sdpabs
