#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sdpabs/predicate.hpp"
#include "sdpabs/theory.hpp"

namespace test {

using namespace sdpabs;

// Terms and predicates built by hand.
struct Facts {
  TermTable terms;
  PredicateTable preds;

  TermId v(const std::string& name) { return terms.var(name); }
  TermId f(const std::string& fn, std::vector<TermId> args) { return terms.app(fn, args); }
  PredId eq(TermId a, TermId b) { return preds.intern(Predicate::eq(a, b)); }
  PredId ne(TermId a, TermId b) { return preds.intern(Predicate::ne(a, b)); }
  PredId le(TermId x, TermId y, long c) { return preds.intern(Predicate::le(x, y, Rational(c))); }
  PredId lt(TermId x, TermId y, long c) { return preds.intern(Predicate::lt(x, y, Rational(c))); }
  std::string str(PredId p) const { return to_string(preds.at(p), terms); }
};

struct Derivation {
  PredId conclusion;
  std::vector<PredId> antecedents;
};

class Collect final : public DerivationSink, public ContradictionSink {
 public:
  void derive(PredId conclusion, std::span<const PredId> ants) override {
    derived.push_back({conclusion, {ants.begin(), ants.end()}});
  }
  void contradiction(std::span<const PredId> ants) override { conflicts.emplace_back(ants.begin(), ants.end()); }

  bool has(PredId p) const {
    return std::any_of(derived.begin(), derived.end(), [&](const Derivation& d) { return d.conclusion == p; });
  }

  std::vector<Derivation> derived;
  std::vector<std::vector<PredId>> conflicts;
};

inline FactSet fact_set(std::initializer_list<PredId> items) {
  FactSet w;
  for (PredId p : items) w.insert(p);
  return w;
}

// Value of a predicate under an assignment of rationals to terms.
inline bool holds(const Predicate& p, const std::map<std::uint32_t, Rational>& val) {
  Rational x = val.at(p.lhs.index), y = val.at(p.rhs.index);
  switch (p.kind) {
    case PredKind::Eq: return x == y;
    case PredKind::Ne: return x != y;
    case PredKind::Le: return x <= y + p.offset;
    case PredKind::Lt: return x < y + p.offset;
  }
  return false;
}

}  // namespace test
