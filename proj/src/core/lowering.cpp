#include "sdpabs/lowering.hpp"

#include "sdpabs/error.hpp"

namespace sdpabs {

namespace {

void collect_symbols(const TermAst& t, std::set<std::string>& out) {
  if (t.kind == TermAst::Kind::Symbol || t.kind == TermAst::Kind::Apply) out.insert(t.name);
  for (const TermAst& a : t.args) collect_symbols(a, out);
}

}  // namespace

void Lowering::reserve_symbols(const Problem& problem) {
  for (const Atom& a : problem.atoms) {
    collect_symbols(a.lhs, reserved_);
    collect_symbols(a.rhs, reserved_);
  }
}

std::vector<PredId> Lowering::binding_predicates() const {
  std::vector<PredId> out;
  for (const Binding& b : bindings_) out.insert(out.end(), b.preds.begin(), b.preds.end());
  return out;
}

TermId Lowering::fresh_for(const TermAst& t, bool euf_owner) {
  std::string key = t.str();
  if (auto it = fresh_by_term_.find(key); it != fresh_by_term_.end()) return it->second;

  // The bound subterm is lowered first so nested fresh variables get the
  // smaller indices.
  Binding binding;
  binding.term = key;
  binding.owned_by_euf = euf_owner;
  std::vector<Predicate> facts;
  if (euf_owner) {
    TermId rhs = euf_term(t);
    std::string name;
    do name = "w" + std::to_string(next_fresh_++);
    while (reserved_.count(name) || terms_.find_var(name));
    binding.fresh = terms_.var(name);
    facts.push_back(Predicate::eq(binding.fresh, rhs));
  } else {
    auto [base, c] = dif_term(t);
    std::string name;
    do name = "w" + std::to_string(next_fresh_++);
    while (reserved_.count(name) || terms_.find_var(name));
    binding.fresh = terms_.var(name);
    facts.push_back(Predicate::le(binding.fresh, base, c));
    facts.push_back(Predicate::le(base, binding.fresh, -c));
  }
  for (const Predicate& p : facts) binding.preds.push_back(preds_.intern(p));
  fresh_by_term_.emplace(key, binding.fresh);
  TermId fresh = binding.fresh;
  bindings_.push_back(std::move(binding));
  return fresh;
}

TermId Lowering::euf_term(const TermAst& t) {
  switch (t.kind) {
    case TermAst::Kind::Symbol:
      return terms_.var(t.name);
    case TermAst::Kind::Apply: {
      std::vector<TermId> args;
      args.reserve(t.args.size());
      for (const TermAst& a : t.args) args.push_back(euf_term(a));
      return terms_.app(t.name, args);
    }
    case TermAst::Kind::Number:
    case TermAst::Kind::Plus:
      return fresh_for(t, /*euf_owner=*/false);
  }
  throw UnsupportedAtom("unsupported term " + t.str());
}

std::pair<TermId, Rational> Lowering::dif_term(const TermAst& t) {
  switch (t.kind) {
    case TermAst::Kind::Symbol:
      return {terms_.var(t.name), Rational(0)};
    case TermAst::Kind::Number:
      return {terms_.zero(), t.value};
    case TermAst::Kind::Plus: {
      auto [base, c] = dif_term(t.args.front());
      return {base, c + t.value};
    }
    case TermAst::Kind::Apply:
      return {fresh_for(t, /*euf_owner=*/true), Rational(0)};
  }
  throw UnsupportedAtom("unsupported term " + t.str());
}

LoweredLiteral Lowering::lower(const Atom& atom, bool positive) {
  LoweredLiteral out;
  auto conj = [&](std::initializer_list<Predicate> ps) {
    std::vector<PredId> ids;
    for (const Predicate& p : ps) ids.push_back(preds_.intern(p));
    out.alternatives.push_back(std::move(ids));
  };

  if (atom.is_euf()) {
    TermId a = euf_term(atom.lhs);
    TermId b = euf_term(atom.rhs);
    bool equal = (atom.rel == Relation::Eq) == positive;
    conj({equal ? Predicate::eq(a, b) : Predicate::ne(a, b)});
    return out;
  }

  // x + c1 REL y + c2  becomes  x REL y + d
  auto [x, c1] = dif_term(atom.lhs);
  auto [y, c2] = dif_term(atom.rhs);
  Rational d = c2 - c1;

  Relation rel = atom.rel;
  if (!positive) {
    switch (rel) {
      case Relation::Le:  // not (x <= y + d)  ==  y < x - d
        conj({Predicate::lt(y, x, -d)});
        return out;
      case Relation::Lt:
        conj({Predicate::le(y, x, -d)});
        return out;
      case Relation::Eq: rel = Relation::Ne; break;
      case Relation::Ne: rel = Relation::Eq; break;
    }
  }
  switch (rel) {
    case Relation::Le: conj({Predicate::le(x, y, d)}); break;
    case Relation::Lt: conj({Predicate::lt(x, y, d)}); break;
    case Relation::Eq: conj({Predicate::le(x, y, d), Predicate::le(y, x, -d)}); break;
    case Relation::Ne:
      conj({Predicate::lt(x, y, d)});
      conj({Predicate::lt(y, x, -d)});
      break;
  }
  return out;
}

}  // namespace sdpabs
