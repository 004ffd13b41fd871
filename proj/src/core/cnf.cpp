#include "sdpabs/cnf.hpp"

#include <algorithm>

#include "sdpabs/error.hpp"

namespace sdpabs {

namespace {

Formula push_negations(const Formula& f, bool negate) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True: return negate ? Formula::falsity() : Formula::truth();
    case K::False: return negate ? Formula::truth() : Formula::falsity();
    case K::Atom: return negate ? Formula::neg(f) : f;
    case K::Not: return push_negations(f.children.front(), !negate);
    case K::And:
    case K::Or: {
      std::vector<Formula> children;
      children.reserve(f.children.size());
      for (const Formula& c : f.children) children.push_back(push_negations(c, negate));
      bool conj = (f.kind == K::And) != negate;
      return conj ? Formula::conj(std::move(children)) : Formula::disj(std::move(children));
    }
  }
  return f;
}

bool normalize(Clause& c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i].atom == c[i - 1].atom) return false;  // l and !l
  return true;
}

bool subsumes(const Clause& small, const Clause& big) {
  return small.size() <= big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Clause> simplify(std::vector<Clause> clauses) {
  std::vector<Clause> kept;
  for (Clause& c : clauses)
    if (normalize(c)) kept.push_back(std::move(c));
  std::sort(kept.begin(), kept.end(), [](const Clause& a, const Clause& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<Clause> out;
  for (Clause& c : kept) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Clause& o) { return subsumes(o, c); });
    if (!redundant) out.push_back(std::move(c));
  }
  return out;
}

// Normal form of an NNF formula. With `conjunctive`, the result is a set of
// clauses read as a conjunction of disjunctions; otherwise a disjunction of
// conjunctions. `outer` is the connective joining the groups.
std::vector<Clause> normal_form(const Formula& f, bool conjunctive, std::size_t cap) {
  using K = Formula::Kind;
  const K outer = conjunctive ? K::And : K::Or;
  switch (f.kind) {
    case K::True:
    case K::False: {
      bool neutral = (f.kind == K::True) == conjunctive;
      if (neutral) return {};    // empty conjunction / disjunction
      return {Clause{}};         // one empty group: the absorbing element
    }
    case K::Atom: return {Clause{Literal{f.atom, true}}};
    case K::Not: return {Clause{Literal{f.children.front().atom, false}}};
    default: break;
  }

  if (f.kind == outer) {
    std::vector<Clause> out;
    for (const Formula& c : f.children) {
      std::vector<Clause> part = normal_form(c, conjunctive, cap);
      out.insert(out.end(), part.begin(), part.end());
      if (out.size() > cap) throw CnfBlowup("normal form exceeds " + std::to_string(cap) + " clauses");
    }
    return simplify(std::move(out));
  }

  // Distribute the inner connective over the groups of each child.
  std::vector<Clause> acc{Clause{}};
  for (const Formula& c : f.children) {
    std::vector<Clause> part = normal_form(c, conjunctive, cap);
    std::vector<Clause> next;
    for (const Clause& a : acc)
      for (const Clause& b : part) {
        Clause merged = a;
        merged.insert(merged.end(), b.begin(), b.end());
        next.push_back(std::move(merged));
        if (next.size() > cap) throw CnfBlowup("normal form exceeds " + std::to_string(cap) + " clauses");
      }
    acc = simplify(std::move(next));
  }
  return acc;
}

}  // namespace

Formula nnf(const Formula& f) { return push_negations(f, false); }

std::vector<Clause> to_cnf(const Formula& f, std::size_t cap) { return normal_form(nnf(f), true, cap); }

std::vector<Clause> to_dnf(const Formula& f, std::size_t cap) { return normal_form(nnf(f), false, cap); }

}  // namespace sdpabs
