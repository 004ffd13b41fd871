#include "doctest.h"
#include "sdpabs/euf.hpp"
#include "sdpabs/saturation.hpp"
#include "sdpabs/testing.hpp"
#include "support.hpp"

using namespace sdpabs;
using test::Collect;
using test::Facts;

TEST_CASE("transitivity") {
  Facts f;
  TermId a = f.v("a"), b = f.v("b"), c = f.v("c");
  std::vector<PredId> g = {f.eq(a, b), f.eq(b, c)};
  EufTheory t(f.terms, f.preds, g);
  Collect out;
  t.infer(test::fact_set({g[0], g[1]}), 0, out);
  REQUIRE(out.derived.size() == 1);
  CHECK(out.derived[0].conclusion == f.eq(a, c));
  std::vector<PredId> ants = out.derived[0].antecedents;
  std::sort(ants.begin(), ants.end());
  CHECK(ants == std::vector<PredId>{g[0], g[1]});
}

TEST_CASE("congruence needs both applications in the universe") {
  Facts f;
  TermId x = f.v("x"), y = f.v("y");
  TermId fx = f.f("f", {x}), fy = f.f("f", {y});
  PredId xy = f.eq(x, y);
  std::vector<PredId> with_f = {xy, f.ne(fx, fy)};
  EufTheory t(f.terms, f.preds, with_f);
  Collect out;
  t.infer(test::fact_set({xy}), 0, out);
  CHECK(out.has(f.eq(fx, fy)));

  std::vector<PredId> bare = {xy};
  EufTheory u(f.terms, f.preds, bare);
  Collect none;
  u.infer(test::fact_set({xy}), 0, none);
  CHECK(none.derived.empty());
}

TEST_CASE("different symbols are not congruent") {
  Facts f;
  TermId x = f.v("x"), y = f.v("y");
  std::vector<PredId> g = {f.eq(x, y), f.ne(f.f("g", {x}), f.f("f", {y}))};
  EufTheory t(f.terms, f.preds, g);
  CHECK(dp_check(t, g).verdict == Verdict::Sat);
  CHECK(congruence_closure_sat(g, f.preds, f.terms));
}

TEST_CASE("contradictions pair an equality with its disequality") {
  Facts f;
  TermId a = f.v("a"), b = f.v("b"), c = f.v("c");
  std::vector<PredId> g = {f.eq(a, c), f.ne(a, c)};
  EufTheory t(f.terms, f.preds, g);
  Collect out;
  t.contradictions(test::fact_set({g[0], g[1]}), out);
  CHECK(out.conflicts.size() == 1);
  Collect none;
  t.contradictions(test::fact_set({f.eq(a, b)}), none);
  CHECK(none.conflicts.empty());
}

TEST_CASE("depth bound is three times the universe") {
  Facts f;
  TermId a = f.v("a"), b = f.v("b"), c = f.v("c"), d = f.v("d");
  std::vector<PredId> g = {f.eq(a, b), f.eq(b, c), f.eq(a, d), f.eq(d, c), f.ne(a, c)};
  CHECK(euf_depth_bound(g, f.preds, f.terms) == 12);
  CHECK(euf_depth_bound({}, f.preds, f.terms) == 0);
  EufTheory t(f.terms, f.preds, g);
  CHECK(t.depth_bound() == 12);
}

TEST_CASE("congruence closure oracle") {
  Facts f;
  TermId a = f.v("a"), b = f.v("b"), c = f.v("c"), x = f.v("x"), y = f.v("y");
  std::vector<PredId> tr = {f.eq(a, b), f.eq(b, c), f.ne(a, c)};
  CHECK_FALSE(congruence_closure_sat(tr, f.preds, f.terms));
  std::vector<PredId> cong = {f.eq(x, y), f.ne(f.f("f", {x}), f.f("f", {y}))};
  CHECK_FALSE(congruence_closure_sat(cong, f.preds, f.terms));
  TermId ffx = f.f("f", {f.f("f", {x})});
  std::vector<PredId> nested = {f.eq(f.f("f", {x}), x), f.ne(ffx, x)};
  CHECK_FALSE(congruence_closure_sat(nested, f.preds, f.terms));
  std::vector<PredId> sat = {f.eq(a, b), f.ne(b, c)};
  CHECK(congruence_closure_sat(sat, f.preds, f.terms));
}

TEST_CASE("decision procedure matches congruence closure on random sets") {
  testing::Rng rng(21);
  testing::EufShape shape;
  shape.g_max = 12;
  int unsat = 0;
  for (int i = 0; i < 300; ++i) {
    auto inst = testing::random_euf(rng, shape);
    std::vector<PredId> g = inst.g;
    for (PredId p : testing::negated(inst.preds, inst.e)) g.push_back(p);
    EufTheory t(inst.terms, inst.preds, g);
    DpResult r = dp_check(t, g);
    bool oracle = congruence_closure_sat(g, inst.preds, inst.terms);
    REQUIRE((r.verdict == Verdict::Sat) == oracle);
    unsat += !oracle;
    std::size_t m = t.universe().size(), eqs = 0;
    for (PredId p : r.facts) eqs += inst.preds.at(p).kind == PredKind::Eq;
    CHECK(eqs <= m * (m - 1) / 2);
  }
  CHECK(unsat > 30);
  CHECK(unsat < 270);
}

TEST_CASE("semi-naive inference misses nothing new") {
  testing::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    auto inst = testing::random_euf(rng);
    EufTheory t(inst.terms, inst.preds, inst.g);
    FactSet w;
    for (PredId p : inst.g) w.insert(p);
    std::size_t split = w.size() / 2;
    Collect full, fresh;
    t.infer(w, 0, full);
    t.infer(w, split, fresh);
    // Every derivation with an antecedent at position >= split appears in the semi-naive run.
    for (const auto& d : full.derived) {
      bool is_new = std::any_of(d.antecedents.begin(), d.antecedents.end(),
                                [&](PredId a) { return w.position(a) >= split; });
      bool found = std::any_of(fresh.derived.begin(), fresh.derived.end(), [&](const test::Derivation& e) {
        return e.conclusion == d.conclusion && e.antecedents == d.antecedents;
      });
      CHECK(is_new == found);
    }
  }
}
