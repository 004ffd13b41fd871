#include "sdpabs/predicate.hpp"

#include <algorithm>

namespace sdpabs {

Predicate Predicate::eq(TermId a, TermId b) {
  if (b < a) std::swap(a, b);
  return {PredKind::Eq, a, b, 0};
}

Predicate Predicate::ne(TermId a, TermId b) {
  if (b < a) std::swap(a, b);
  return {PredKind::Ne, a, b, 0};
}

Predicate negate(const Predicate& p) {
  switch (p.kind) {
    case PredKind::Eq: return Predicate{PredKind::Ne, p.lhs, p.rhs, 0};
    case PredKind::Ne: return Predicate{PredKind::Eq, p.lhs, p.rhs, 0};
    case PredKind::Le: return Predicate::lt(p.rhs, p.lhs, -p.offset);
    case PredKind::Lt: return Predicate::le(p.rhs, p.lhs, -p.offset);
  }
  return p;
}

std::string to_string(const Predicate& p, const TermTable& terms) {
  switch (p.kind) {
    case PredKind::Eq: return terms.str(p.lhs) + " = " + terms.str(p.rhs);
    case PredKind::Ne: return terms.str(p.lhs) + " != " + terms.str(p.rhs);
    case PredKind::Le:
    case PredKind::Lt: {
      std::string out = terms.str(p.lhs) + (p.kind == PredKind::Le ? " <= " : " < ") + terms.str(p.rhs);
      if (p.offset > 0) out += " + " + to_string(p.offset);
      if (p.offset < 0) out += " - " + to_string(-p.offset);
      return out;
    }
  }
  return {};
}

std::size_t PredicateHash::operator()(const Predicate& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.kind);
  h = h * 1000003u ^ p.lhs.index;
  h = h * 1000003u ^ p.rhs.index;
  h = h * 1000003u ^ RationalHash{}(p.offset);
  return h;
}

PredId PredicateTable::intern(const Predicate& p) {
  auto [it, inserted] = index_.try_emplace(p, PredId{static_cast<std::uint32_t>(preds_.size())});
  if (inserted) preds_.push_back(p);
  return it->second;
}

std::optional<PredId> PredicateTable::find(const Predicate& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<TermId> terms_of(std::span<const PredId> g, const PredicateTable& preds,
                             const TermTable& terms) {
  std::vector<char> seen;
  std::vector<TermId> out;
  for (PredId id : g) {
    const Predicate& p = preds.at(id);
    terms.collect_subterms(p.lhs, seen, out);
    terms.collect_subterms(p.rhs, seen, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sdpabs
