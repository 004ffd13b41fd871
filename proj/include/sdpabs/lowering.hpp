#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sdpabs/predicate.hpp"
#include "sdpabs/syntax.hpp"

namespace sdpabs {

/// A literal as a disjunction of conjunctions of canonical predicates.
/// Everything except difference-logic (dis)equalities lowers to a single
/// conjunction; `x != y + c` and the negation of `x = y + c` are disjunctive.
struct LoweredLiteral {
  std::vector<std::vector<PredId>> alternatives;

  bool disjunctive() const { return alternatives.size() > 1; }
};

/// `fresh = term`, introduced when a subterm of one theory occurs inside an
/// atom of the other.
struct Binding {
  TermId fresh;
  std::string term;           // the purified subterm, in input syntax
  bool owned_by_euf = true;   // theory the bound subterm belongs to
  std::vector<PredId> preds;  // one EUF equality, or two difference edges
};

/// Turns atoms into canonical predicates. Function applications inside
/// arithmetic and arithmetic inside function arguments are replaced by fresh
/// variables w1, w2, ... (first-occurrence order, reused for identical
/// subterms) with a binding predicate in the subterm's own theory.
class Lowering {
 public:
  Lowering(TermTable& terms, PredicateTable& preds) : terms_(terms), preds_(preds) {}

  /// Symbols the fresh-variable generator must avoid.
  void reserve_symbols(const Problem& problem);

  LoweredLiteral lower(const Atom& atom, bool positive);

  const std::vector<Binding>& bindings() const { return bindings_; }
  std::vector<PredId> binding_predicates() const;

 private:
  TermId euf_term(const TermAst& t);
  std::pair<TermId, Rational> dif_term(const TermAst& t);
  TermId fresh_for(const TermAst& t, bool euf_owner);

  TermTable& terms_;
  PredicateTable& preds_;
  std::set<std::string> reserved_;
  std::map<std::string, TermId> fresh_by_term_;
  std::vector<Binding> bindings_;
  unsigned next_fresh_ = 1;
};

}  // namespace sdpabs
