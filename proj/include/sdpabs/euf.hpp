#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sdpabs/theory.hpp"

namespace sdpabs {

/// Equality with uninterpreted functions: transitivity and congruence over
/// the terms of the context; symmetry is absorbed by the canonical order.
class EufTheory final : public Theory {
 public:
  EufTheory(const TermTable& terms, PredicateTable& preds, std::span<const PredId> context);

  void infer(const FactSet& w, std::size_t new_from, DerivationSink& out) override;
  void contradictions(const FactSet& w, ContradictionSink& out) const override;
  std::size_t depth_bound() const override { return 3 * universe_.size(); }
  std::vector<SharedEquality> shared_equalities(const FactSet& w,
                                                std::span<const TermId> shared) const override;

  std::span<const TermId> universe() const { return universe_; }
  bool in_universe(TermId t) const { return t.index < allowed_.size() && allowed_[t.index]; }

 private:
  std::vector<TermId> universe_;
  std::vector<char> allowed_;
  std::vector<std::vector<TermId>> app_groups_;  // same symbol and arity
  std::vector<std::vector<std::pair<TermId, PredId>>> adjacency_;
};

std::size_t euf_depth_bound(std::span<const PredId> g, const PredicateTable& preds,
                            const TermTable& terms);

/// Union-find congruence closure over terms_of(g). True iff satisfiable.
bool congruence_closure_sat(std::span<const PredId> g, const PredicateTable& preds,
                            const TermTable& terms);

}  // namespace sdpabs
