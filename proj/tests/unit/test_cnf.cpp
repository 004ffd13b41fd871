#include "doctest.h"
#include "sdpabs/cnf.hpp"
#include "sdpabs/error.hpp"
#include "sdpabs/testing.hpp"

using namespace sdpabs;

namespace {

Formula lit(std::size_t a, bool pos = true) { return Formula::literal(Literal{a, pos}); }

bool eval_cnf(const std::vector<Clause>& cnf, const std::vector<bool>& v) {
  for (const Clause& c : cnf) {
    bool any = false;
    for (Literal l : c) any = any || v[l.atom] == l.positive;
    if (!any) return false;
  }
  return true;
}

bool eval_dnf(const std::vector<Clause>& dnf, const std::vector<bool>& v) {
  for (const Clause& t : dnf) {
    bool all = true;
    for (Literal l : t) all = all && v[l.atom] == l.positive;
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("cnf of an atom and of a distribution") {
  CHECK(to_cnf(lit(0)) == std::vector<Clause>{{Literal{0, true}}});
  // (a & b) | c
  auto cnf = to_cnf(Formula::disj({Formula::conj({lit(0), lit(1)}), lit(2)}));
  CHECK(cnf == std::vector<Clause>{{Literal{0, true}, Literal{2, true}}, {Literal{1, true}, Literal{2, true}}});
}

TEST_CASE("constants") {
  CHECK(to_cnf(Formula::truth()).empty());
  CHECK(to_cnf(Formula::falsity()) == std::vector<Clause>{Clause{}});
  CHECK(to_cnf(Formula::disj({lit(0), lit(0, false)})).empty());
  CHECK(to_dnf(Formula::conj({lit(0), lit(0, false)})).empty());
  CHECK(to_dnf(Formula::truth()) == std::vector<Clause>{Clause{}});
}

TEST_CASE("nnf pushes negations to atoms") {
  Formula f = nnf(Formula::neg(Formula::conj({lit(0), Formula::neg(lit(1))})));
  CHECK(f.kind == Formula::Kind::Or);
  for (const Formula& c : f.children) CHECK(c.kind != Formula::Kind::And);
}

TEST_CASE("cnf and dnf agree with the truth table on random formulas") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Formula f = testing::random_formula(rng, 6, 8);
    auto cnf = to_cnf(f);
    auto dnf = to_dnf(f);
    for (unsigned bits = 0; bits < 64; ++bits) {
      std::vector<bool> v(6);
      for (int i = 0; i < 6; ++i) v[i] = (bits >> i) & 1u;
      REQUIRE(eval_cnf(cnf, v) == f.eval(v));
      REQUIRE(eval_dnf(dnf, v) == f.eval(v));
    }
  }
}

TEST_CASE("clauses are sorted, tautology free and not subsumed") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto cnf = to_cnf(testing::random_formula(rng, 5, 7));
    for (const Clause& c : cnf) {
      CHECK(std::is_sorted(c.begin(), c.end()));
      for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].atom != c[i].atom);
    }
    for (std::size_t i = 0; i < cnf.size(); ++i)
      for (std::size_t j = 0; j < cnf.size(); ++j)
        if (i != j) CHECK_FALSE(std::includes(cnf[j].begin(), cnf[j].end(), cnf[i].begin(), cnf[i].end()));
  }
}

TEST_CASE("distribution past the cap throws") {
  std::vector<Formula> terms;
  for (std::size_t i = 0; i < 14; ++i) terms.push_back(Formula::conj({lit(2 * i), lit(2 * i + 1)}));
  Formula f = Formula::disj(terms);
  CHECK_THROWS_AS(to_cnf(f, 1000), CnfBlowup);
  CHECK(to_cnf(f, 1 << 15).size() == (1u << 14));
}
