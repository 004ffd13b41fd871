#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "sdpabs/predicate.hpp"
#include "sdpabs/term.hpp"

namespace sdpabs {

/// Insertion-ordered set of predicate ids with O(1) membership.
class FactSet {
 public:
  bool insert(PredId p);
  bool contains(PredId p) const { return p.index < member_.size() && member_[p.index]; }
  std::span<const PredId> items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  /// Position of `p` in insertion order; `p` must be a member.
  std::size_t position(PredId p) const { return position_[p.index]; }

 private:
  std::vector<PredId> items_;
  std::vector<char> member_;
  std::vector<std::uint32_t> position_;
};

class DerivationSink {
 public:
  virtual ~DerivationSink() = default;
  virtual void derive(PredId conclusion, std::span<const PredId> antecedents) = 0;
};

class ContradictionSink {
 public:
  virtual ~ContradictionSink() = default;
  virtual void contradiction(std::span<const PredId> antecedents) = 0;
};

/// `x = y` between two shared variables, justified by `antecedents`.
struct SharedEquality {
  TermId x;
  TermId y;
  std::vector<PredId> antecedents;
};

/// A saturation theory instantiated for one input set (its context): the
/// universe, constant caps and iteration bound are fixed at construction.
class Theory {
 public:
  Theory(const TermTable& terms, PredicateTable& preds) : terms_(terms), preds_(preds) {}
  virtual ~Theory() = default;

  /// Emits every rule instance whose antecedents all lie in `w` and at least
  /// one of which sits at position >= `new_from`. With `new_from == 0` that
  /// is every derivation over `w`.
  virtual void infer(const FactSet& w, std::size_t new_from, DerivationSink& out) = 0;
  virtual void contradictions(const FactSet& w, ContradictionSink& out) const = 0;
  virtual std::size_t depth_bound() const = 0;
  /// Variable equalities over `shared` implied by single rule instances in `w`.
  virtual std::vector<SharedEquality> shared_equalities(const FactSet& w,
                                                        std::span<const TermId> shared) const = 0;

  const TermTable& terms() const { return terms_; }
  PredicateTable& preds() const { return preds_; }

 protected:
  const TermTable& terms_;
  PredicateTable& preds_;
};

enum class TheoryId { Euf, Dif };

struct TheoryOptions {
  bool prune = true;  // difference logic: drop edges whose constant exceeds the cap
};

/// The predicates that stand for `x = y` inside theory `id`: one equality,
/// or the two edges x <= y + 0 and y <= x + 0.
std::vector<PredId> import_equality(TheoryId id, TermId x, TermId y, PredicateTable& preds);

std::unique_ptr<Theory> make_theory(TheoryId id, const TermTable& terms, PredicateTable& preds,
                                    std::span<const PredId> context, TheoryOptions options = {});

}  // namespace sdpabs
