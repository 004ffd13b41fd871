#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sdpabs/rational.hpp"

namespace sdpabs {

/// Term as written in the input, before interning and purification.
struct TermAst {
  enum class Kind { Symbol, Number, Apply, Plus };

  Kind kind = Kind::Symbol;
  std::string name;           // Symbol name or function symbol
  Rational value = 0;         // Number, or the offset of Plus
  std::vector<TermAst> args;  // Apply arguments; Plus has exactly one

  static TermAst symbol(std::string name);
  static TermAst number(Rational value);
  static TermAst apply(std::string fn, std::vector<TermAst> args);
  static TermAst plus(TermAst base, Rational offset);

  /// True for symbols and applications: terms that need no arithmetic.
  bool is_uninterpreted() const { return kind == Kind::Symbol || kind == Kind::Apply; }

  std::string str() const;
};

enum class Relation { Eq, Ne, Lt, Le };

const char* relation_symbol(Relation r);

struct Atom {
  Relation rel = Relation::Eq;
  TermAst lhs;
  TermAst rhs;

  /// Equalities between uninterpreted terms belong to EUF; everything else
  /// (orderings, numerals, `+`) is a difference-logic atom.
  bool is_euf() const {
    return (rel == Relation::Eq || rel == Relation::Ne) && lhs.is_uninterpreted() &&
           rhs.is_uninterpreted();
  }

  std::string str() const;
};

/// Atom index plus polarity.
struct Literal {
  std::size_t atom = 0;
  bool positive = true;

  Literal negated() const { return Literal{atom, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct Formula {
  enum class Kind { True, False, Atom, And, Or, Not };

  Kind kind = Kind::True;
  std::size_t atom = 0;
  std::vector<Formula> children;

  static Formula truth() { return Formula{Kind::True, 0, {}}; }
  static Formula falsity() { return Formula{Kind::False, 0, {}}; }
  static Formula atom_of(std::size_t a) { return Formula{Kind::Atom, a, {}}; }
  static Formula literal(Literal l);
  static Formula conj(std::vector<Formula> children) { return Formula{Kind::And, 0, std::move(children)}; }
  static Formula disj(std::vector<Formula> children) { return Formula{Kind::Or, 0, std::move(children)}; }
  static Formula neg(Formula child);

  /// Evaluates under an assignment of truth values to atom indices.
  bool eval(const std::vector<bool>& atom_values) const;
  void collect_atoms(std::vector<std::size_t>& out) const;
};

enum class TheoryKind { Euf, Dif, Mixed };

const char* theory_name(TheoryKind t);

struct Problem {
  std::vector<Atom> atoms;               // deduplicated atom table
  std::vector<std::size_t> predicates;   // P, in input order
  Formula goal = Formula::truth();
  bool has_goal = false;
  TheoryKind theory = TheoryKind::Euf;

  /// Adds `atom` unless an identical one exists; returns its index.
  std::size_t add_atom(Atom atom);

  std::string literal_str(Literal l) const;
  std::string formula_str(const Formula& f) const;

  /// Recomputes `theory` from the atoms present.
  void infer_theory();
};

}  // namespace sdpabs
