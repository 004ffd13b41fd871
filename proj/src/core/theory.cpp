#include "sdpabs/theory.hpp"

#include "sdpabs/dif.hpp"
#include "sdpabs/euf.hpp"

namespace sdpabs {

bool FactSet::insert(PredId p) {
  if (p.index >= member_.size()) {
    member_.resize(p.index + 1, 0);
    position_.resize(p.index + 1, 0);
  }
  if (member_[p.index]) return false;
  member_[p.index] = 1;
  position_[p.index] = static_cast<std::uint32_t>(items_.size());
  items_.push_back(p);
  return true;
}

std::vector<PredId> import_equality(TheoryId id, TermId x, TermId y, PredicateTable& preds) {
  if (id == TheoryId::Euf) return {preds.intern(Predicate::eq(x, y))};
  return {preds.intern(Predicate::le(x, y, 0)), preds.intern(Predicate::le(y, x, 0))};
}

std::unique_ptr<Theory> make_theory(TheoryId id, const TermTable& terms, PredicateTable& preds,
                                    std::span<const PredId> context, TheoryOptions options) {
  if (id == TheoryId::Euf) return std::make_unique<EufTheory>(terms, preds, context);
  return std::make_unique<DifTheory>(terms, preds, context, options.prune);
}

}  // namespace sdpabs
