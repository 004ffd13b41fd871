#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sdpabs/theory.hpp"

namespace sdpabs {

enum class Verdict { Sat, Unsat };

const char* verdict_name(Verdict v);

struct DpOptions {
  /// Overrides the theory's depth bound.
  std::optional<std::size_t> iterations;
  /// Stop once an iteration adds nothing. The remaining iterations could not
  /// add anything either, so the verdict is unchanged.
  bool stop_at_fixpoint = false;
  bool record_trace = false;
};

struct DpResult {
  Verdict verdict = Verdict::Sat;
  std::vector<PredId> facts;                // final W, insertion order
  std::size_t iterations = 0;               // loop iterations actually run
  std::vector<std::vector<PredId>> trace;   // W after each iteration
  std::vector<std::vector<PredId>> conflicts;
};

/// Saturates `g` under `theory` for its depth bound, then looks for
/// contradictions among the saturated facts.
DpResult dp_check(Theory& theory, std::span<const PredId> g, DpOptions options = {});

}  // namespace sdpabs
