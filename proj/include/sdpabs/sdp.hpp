#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sdpabs/circuit.hpp"
#include "sdpabs/theory.hpp"

namespace sdpabs {

/// Initial expression for a fact: a leaf b_g for input predicates, true for
/// negated goal facts, or any circuit when facts arrive from another theory.
struct Seed {
  PredId pred;
  CircuitRef expr;
};

struct SdpOptions {
  std::optional<std::size_t> iterations;
  /// Stop as soon as an iteration adds no new fact to W. Incomplete; kept
  /// only to demonstrate that the full schedule is needed.
  bool stop_when_w_stable = false;
  bool record_levels = false;
};

struct SdpResult {
  CircuitRef root = CircuitStore::kFalse;
  std::vector<PredId> facts;              // W at the end, insertion order
  std::vector<CircuitRef> tops;           // indexed by PredId; kFalse when absent
  std::size_t iterations = 0;
  std::vector<std::vector<CircuitRef>> levels;  // tops after each iteration (levels[0] = seeds)
  std::size_t derivations = 0;

  CircuitRef top(PredId p) const { return p.index < tops.size() ? tops[p.index] : CircuitStore::kFalse; }
};

/// Symbolic saturation: runs the theory's derivations over the seeded facts
/// and records, per fact, a monotone circuit over the seed expressions that
/// is true exactly for the subsets from which the fact is derived. `root`
/// is the disjunction over all contradictions.
SdpResult sdp(CircuitStore& store, Theory& theory, std::span<const Seed> seeds, SdpOptions options = {});

/// Merges duplicate seeds for one predicate into a disjunction.
std::vector<Seed> merge_seeds(CircuitStore& store, std::span<const Seed> seeds);

}  // namespace sdpabs
