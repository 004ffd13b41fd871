#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sdpabs/saturation.hpp"
#include "sdpabs/sdp.hpp"

namespace sdpabs {

/// Purified facts split by theory, plus the variables both sides mention.
struct TheorySplit {
  std::vector<PredId> euf;
  std::vector<PredId> dif;
  std::vector<TermId> shared;  // sorted
};

TheorySplit split_theories(std::span<const PredId> g, const PredicateTable& preds, const TermTable& terms);

struct CombinedOptions {
  /// Defaults to max(1, |shared variables|).
  std::optional<std::size_t> rounds;
  TheoryOptions theory;
  /// Passed to each per-theory DP run (the concrete procedure only).
  bool stop_at_fixpoint = false;
};

struct SharedPair {
  TermId x;
  TermId y;
  friend auto operator<=>(const SharedPair&, const SharedPair&) = default;
};

struct CombinedDpResult {
  Verdict verdict = Verdict::Sat;
  std::size_t rounds = 0;
  std::vector<SharedPair> delta;  // equalities exchanged, in discovery order
};

/// Alternates EUF and difference-logic saturation, exchanging implied
/// equalities between shared variables until a contradiction, a fixpoint,
/// or the round limit.
CombinedDpResult dp_combined(const TermTable& terms, PredicateTable& preds, std::span<const PredId> g,
                             CombinedOptions options = {});

struct CombinedSdpResult {
  CircuitRef root = CircuitStore::kFalse;
  std::size_t rounds = 0;
  std::vector<std::pair<SharedPair, CircuitRef>> psi;  // ways each equality was derived
  std::size_t derivations = 0;
};

/// Symbolic counterpart of dp_combined: every round runs both theories
/// symbolically, seeding imported equalities with the circuit recording how
/// they were derived so far.
CombinedSdpResult sdp_combined(CircuitStore& store, const TermTable& terms, PredicateTable& preds,
                               std::span<const Seed> seeds, CombinedOptions options = {});

}  // namespace sdpabs
