#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sdpabs/theory.hpp"

namespace sdpabs {

/// m counts every variable of the input, x0 included when present.
struct DifBounds {
  std::size_t m = 0;
  Rational c_max = 0;
  Rational cap = 0;  // min{(m-1) * c_max, sum of |c|}
};

DifBounds dif_bounds(std::span<const PredId> g, const PredicateTable& preds);

/// max(1, ceil(log2 m)).
std::size_t dif_depth_bound(std::size_t m);

/// Difference logic: edge composition with strictness, illegal 2-cycles as
/// contradictions, offset-0 two-cycles as shared equalities.
class DifTheory final : public Theory {
 public:
  DifTheory(const TermTable& terms, PredicateTable& preds, std::span<const PredId> context,
            bool prune = true);

  void infer(const FactSet& w, std::size_t new_from, DerivationSink& out) override;
  void contradictions(const FactSet& w, ContradictionSink& out) const override;
  std::size_t depth_bound() const override { return dif_depth_bound(bounds_.m); }
  std::vector<SharedEquality> shared_equalities(const FactSet& w,
                                                std::span<const TermId> shared) const override;

  const DifBounds& bounds() const { return bounds_; }

 private:
  struct Edge {
    TermId other;
    PredId pred;
    std::size_t pos;
  };

  DifBounds bounds_;
  bool prune_;
  std::vector<std::vector<Edge>> out_, in_;
};

/// Bellman-Ford over (weight, strict) pairs ordered lexicographically, with
/// `<` edges counting as weight c - epsilon. True iff no illegal cycle.
bool negative_cycle_sat(std::span<const PredId> g, const PredicateTable& preds);

}  // namespace sdpabs
