#include "sdpabs/syntax.hpp"

namespace sdpabs {

TermAst TermAst::symbol(std::string name) {
  TermAst t;
  t.kind = Kind::Symbol;
  t.name = std::move(name);
  return t;
}

TermAst TermAst::number(Rational value) {
  TermAst t;
  t.kind = Kind::Number;
  t.value = value;
  return t;
}

TermAst TermAst::apply(std::string fn, std::vector<TermAst> args) {
  TermAst t;
  t.kind = Kind::Apply;
  t.name = std::move(fn);
  t.args = std::move(args);
  return t;
}

TermAst TermAst::plus(TermAst base, Rational offset) {
  TermAst t;
  t.kind = Kind::Plus;
  t.value = offset;
  t.args.push_back(std::move(base));
  return t;
}

std::string TermAst::str() const {
  switch (kind) {
    case Kind::Symbol:
      return name;
    case Kind::Number:
      return to_string(value);
    case Kind::Plus:
      return "(+ " + args.front().str() + " " + to_string(value) + ")";
    case Kind::Apply: {
      std::string out = "(" + name;
      for (const TermAst& a : args) out += " " + a.str();
      return out + ")";
    }
  }
  return {};
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
  }
  return "?";
}

std::string Atom::str() const {
  return std::string("(") + relation_symbol(rel) + " " + lhs.str() + " " + rhs.str() + ")";
}

Formula Formula::literal(Literal l) {
  Formula a = atom_of(l.atom);
  return l.positive ? a : neg(std::move(a));
}

Formula Formula::neg(Formula child) {
  Formula f{Kind::Not, 0, {}};
  f.children.push_back(std::move(child));
  return f;
}

bool Formula::eval(const std::vector<bool>& atom_values) const {
  switch (kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return atom_values.at(atom);
    case Kind::Not: return !children.front().eval(atom_values);
    case Kind::And:
      for (const Formula& c : children)
        if (!c.eval(atom_values)) return false;
      return true;
    case Kind::Or:
      for (const Formula& c : children)
        if (c.eval(atom_values)) return true;
      return false;
  }
  return false;
}

void Formula::collect_atoms(std::vector<std::size_t>& out) const {
  if (kind == Kind::Atom) {
    out.push_back(atom);
    return;
  }
  for (const Formula& c : children) c.collect_atoms(out);
}

const char* theory_name(TheoryKind t) {
  switch (t) {
    case TheoryKind::Euf: return "euf";
    case TheoryKind::Dif: return "dif";
    case TheoryKind::Mixed: return "mixed";
  }
  return "?";
}

std::size_t Problem::add_atom(Atom atom) {
  std::string text = atom.str();
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i].str() == text) return i;
  atoms.push_back(std::move(atom));
  return atoms.size() - 1;
}

std::string Problem::literal_str(Literal l) const {
  return (l.positive ? "" : "!") + atoms.at(l.atom).str();
}

std::string Problem::formula_str(const Formula& f) const {
  switch (f.kind) {
    case Formula::Kind::True: return "true";
    case Formula::Kind::False: return "false";
    case Formula::Kind::Atom: return atoms.at(f.atom).str();
    case Formula::Kind::Not: return "(not " + formula_str(f.children.front()) + ")";
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::string out = f.kind == Formula::Kind::And ? "(and" : "(or";
      for (const Formula& c : f.children) out += " " + formula_str(c);
      return out + ")";
    }
  }
  return {};
}

namespace {

bool has_arith(const TermAst& t) {
  if (t.kind == TermAst::Kind::Number || t.kind == TermAst::Kind::Plus) return true;
  for (const TermAst& a : t.args)
    if (has_arith(a)) return true;
  return false;
}

bool has_apply(const TermAst& t) {
  if (t.kind == TermAst::Kind::Apply) return true;
  for (const TermAst& a : t.args)
    if (has_apply(a)) return true;
  return false;
}

}  // namespace

void Problem::infer_theory() {
  bool euf = false, dif = false;
  for (const Atom& a : atoms) {
    if (a.is_euf()) {
      euf = true;
      if (has_arith(a.lhs) || has_arith(a.rhs)) dif = true;
    } else {
      dif = true;
      if (has_apply(a.lhs) || has_apply(a.rhs)) euf = true;
    }
  }
  if (euf && dif)
    theory = TheoryKind::Mixed;
  else if (dif)
    theory = TheoryKind::Dif;
  else
    theory = TheoryKind::Euf;
}

}  // namespace sdpabs
