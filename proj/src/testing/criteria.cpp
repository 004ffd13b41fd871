#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "sdpabs/bdd.hpp"
#include "sdpabs/dif.hpp"
#include "sdpabs/engine.hpp"
#include "sdpabs/euf.hpp"
#include "sdpabs/nelson_oppen.hpp"
#include "sdpabs/parser.hpp"
#include "sdpabs/predabs.hpp"
#include "sdpabs/saturation.hpp"
#include "sdpabs/sdp.hpp"
#include "sdpabs/testing.hpp"

namespace sdpabs::testing {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

CriterionReport report(int id, std::string title) {
  CriterionReport rep;
  rep.id = id;
  rep.title = std::move(title);
  return rep;
}

std::vector<PredId> concat(std::vector<PredId> a, const std::vector<PredId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Calls `check(mask, symbolic_unsat)` for every subset of n leaves, with the
// circuit evaluated 64 subsets at a time.
void for_each_subset(const CircuitStore& store, CircuitRef root, std::size_t n,
                     const std::function<void(std::uint64_t, bool)>& check) {
  CircuitEvaluator ev(store, root);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t base = 0; base < total; base += 64) {
    std::vector<std::uint64_t> words(n, 0);
    for (std::uint64_t j = 0; j < 64 && base + j < total; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (((base + j) >> i) & 1u) words[i] |= std::uint64_t{1} << j;
    std::uint64_t out = ev.eval_many([&](std::uint32_t leaf) { return words.at(leaf); });
    for (std::uint64_t j = 0; j < 64 && base + j < total; ++j) check(base + j, ((out >> j) & 1u) != 0);
  }
}

std::vector<PredId> subset_of(const std::vector<PredId>& g, std::uint64_t mask) {
  std::vector<PredId> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if ((mask >> i) & 1u) out.push_back(g[i]);
  return out;
}

TermAst ast_of(const TermTable& terms, TermId t) {
  const Term& term = terms.at(t);
  if (term.is_var()) return TermAst::symbol(term.symbol);
  std::vector<TermAst> args;
  for (TermId a : term.args) args.push_back(ast_of(terms, a));
  return TermAst::apply(term.symbol, std::move(args));
}

// The facts as literals of a problem, for the model-search oracle.
bool semantic_facts_sat(const TermTable& terms, const PredicateTable& preds, const std::vector<PredId>& facts) {
  Problem p;
  std::vector<Literal> lits;
  for (PredId id : facts) {
    const Predicate& q = preds.at(id);
    Atom a;
    a.lhs = ast_of(terms, q.lhs);
    a.rhs = ast_of(terms, q.rhs);
    switch (q.kind) {
      case PredKind::Eq: a.rel = Relation::Eq; break;
      case PredKind::Ne: a.rel = Relation::Ne; break;
      case PredKind::Le: a.rel = Relation::Le; break;
      case PredKind::Lt: a.rel = Relation::Lt; break;
    }
    if (q.is_dif() && q.offset != 0) a.rhs = TermAst::plus(a.rhs, q.offset);
    lits.push_back(Literal{p.add_atom(a), true});
  }
  return semantic_sat(p, lits);
}

// Visits every set of at most k items out of n, as index lists.
void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    fn(pick);
    if (pick.size() == k) return;
    for (std::size_t i = from; i < n; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Symbolic result on every subset of G against the concrete procedure.
std::size_t subset_mismatches(FactInstance& inst, TheoryId id, std::size_t& subsets) {
  std::vector<PredId> ebar = negated(inst.preds, inst.e);
  std::vector<PredId> context = concat(inst.g, ebar);
  auto theory = make_theory(id, inst.terms, inst.preds, context);
  CircuitStore store;
  std::vector<Seed> seeds;
  for (std::size_t i = 0; i < inst.g.size(); ++i)
    seeds.push_back({inst.g[i], store.mk_leaf(static_cast<std::uint32_t>(i))});
  for (PredId p : ebar) seeds.push_back({p, CircuitStore::kTrue});
  SdpResult r = sdp(store, *theory, seeds);
  std::size_t bad = 0;
  for_each_subset(store, r.root, inst.g.size(), [&](std::uint64_t mask, bool unsat) {
    std::vector<PredId> facts = concat(subset_of(inst.g, mask), ebar);
    auto t = make_theory(id, inst.terms, inst.preds, facts);
    bool dp_unsat = dp_check(*t, facts).verdict == Verdict::Unsat;
    ++subsets;
    if (dp_unsat != unsat) ++bad;
  });
  return bad;
}

CriterionReport criterion1(const SuiteOptions& o) {
  CriterionReport rep = report(1, "symbolic saturation equals the decision procedure on every subset");
  Rng rng(o.seed + 1);
  const std::size_t count = o.quick ? 15 : 100;
  std::size_t subsets = 0, bad = 0;
  EufShape euf_shape;
  euf_shape.g_min = 8;
  DifShape dif_shape;
  dif_shape.g_min = 8;
  for (std::size_t i = 0; i < count; ++i) {
    FactInstance euf = random_euf(rng, euf_shape);
    bad += subset_mismatches(euf, TheoryId::Euf, subsets);
    FactInstance dif = random_dif(rng, dif_shape);
    bad += subset_mismatches(dif, TheoryId::Dif, subsets);
  }
  rep.passed = bad == 0;
  rep.detail = fmt("%zu EUF + %zu DIF instances, %zu subsets, %zu mismatches", count, count, subsets, bad);
  return rep;
}

CriterionReport criterion2(const SuiteOptions& o) {
  CriterionReport rep = report(2, "decision procedures agree with congruence closure and Bellman-Ford");
  Rng rng(o.seed + 2);
  const std::size_t count = o.quick ? 100 : 500;
  std::size_t bad = 0, unsat = 0, checked = 0, semantic = 0;
  EufShape euf_shape;
  euf_shape.vars = 5;
  euf_shape.g_max = 12;
  DifShape dif_shape;
  dif_shape.g_max = 12;
  dif_shape.c_max = 8;
  for (std::size_t i = 0; i < count; ++i) {
    FactInstance inst = random_euf(rng, euf_shape);
    std::vector<PredId> facts = concat(inst.g, negated(inst.preds, inst.e));
    auto t = make_theory(TheoryId::Euf, inst.terms, inst.preds, facts);
    bool dp = dp_check(*t, facts).verdict == Verdict::Sat;
    bad += dp != congruence_closure_sat(facts, inst.preds, inst.terms);
    unsat += !dp;
    ++checked;
  }
  for (std::size_t i = 0; i < count; ++i) {
    dif_shape.vars = 2 + i % 8;
    FactInstance inst = random_dif(rng, dif_shape);
    std::vector<PredId> facts = concat(inst.g, negated(inst.preds, inst.e));
    auto t = make_theory(TheoryId::Dif, inst.terms, inst.preds, facts);
    bool dp = dp_check(*t, facts).verdict == Verdict::Sat;
    bad += dp != negative_cycle_sat(facts, inst.preds);
    auto unpruned = make_theory(TheoryId::Dif, inst.terms, inst.preds, facts, TheoryOptions{false});
    bad += dp != (dp_check(*unpruned, facts).verdict == Verdict::Sat);
    if (i % 5 == 0) {
      bad += dp != semantic_facts_sat(inst.terms, inst.preds, facts);
      ++semantic;
    }
    unsat += !dp;
    ++checked;
  }

  // Exhaustive: EUF literals over a, b, c, f(a), f(b), f(c).
  std::size_t exhaustive = 0;
  {
    TermTable terms;
    PredicateTable preds;
    std::vector<TermId> pool;
    for (const char* v : {"a", "b", "c"}) pool.push_back(terms.var(v));
    for (std::size_t i = 0; i < 3; ++i) {
      TermId arg[1] = {pool[i]};
      pool.push_back(terms.app("f", arg));
    }
    std::vector<std::pair<PredId, PredId>> atoms;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        atoms.push_back({preds.intern(Predicate::eq(pool[i], pool[j])), preds.intern(Predicate::ne(pool[i], pool[j]))});
    const std::size_t k = o.quick ? 3 : 6;
    for_each_combination(atoms.size(), k, [&](const std::vector<std::size_t>& pick) {
      for (std::uint32_t signs = 0; signs < (1u << pick.size()); ++signs) {
        std::vector<PredId> facts;
        for (std::size_t i = 0; i < pick.size(); ++i)
          facts.push_back((signs >> i) & 1u ? atoms[pick[i]].second : atoms[pick[i]].first);
        auto t = make_theory(TheoryId::Euf, terms, preds, facts);
        bool dp = dp_check(*t, facts).verdict == Verdict::Sat;
        bad += dp != congruence_closure_sat(facts, preds, terms);
        ++exhaustive;
      }
    });
  }
  // Exhaustive: difference edges over x, y, z with constants -1, 0, 1.
  {
    TermTable terms;
    PredicateTable preds;
    std::vector<TermId> vars = {terms.var("x"), terms.var("y"), terms.var("z")};
    std::vector<PredId> pool;
    for (TermId x : vars)
      for (TermId y : vars)
        if (x != y)
          for (int c = -1; c <= 1; ++c) {
            pool.push_back(preds.intern(Predicate::le(x, y, Rational(c))));
            pool.push_back(preds.intern(Predicate::lt(x, y, Rational(c))));
          }
    const std::size_t k = o.quick ? 2 : 4;
    std::size_t visited = 0;
    for_each_combination(pool.size(), k, [&](const std::vector<std::size_t>& pick) {
      std::vector<PredId> facts;
      for (std::size_t i : pick) facts.push_back(pool[i]);
      auto t = make_theory(TheoryId::Dif, terms, preds, facts);
      bool dp = dp_check(*t, facts).verdict == Verdict::Sat;
      bad += dp != negative_cycle_sat(facts, preds);
      if (visited++ % 7 == 0) {
        bad += dp != semantic_facts_sat(terms, preds, facts);
        ++semantic;
      }
      ++exhaustive;
    });
  }
  rep.passed = bad == 0;
  rep.detail = fmt("%zu random (%zu unsat) + %zu exhaustive sets, %zu also by model search, %zu disagreements",
                   checked, unsat, exhaustive, semantic, bad);
  return rep;
}

CriterionReport criterion3(const SuiteOptions& o) {
  CriterionReport rep = report(3, "combined symbolic procedure equals combined decision procedure");
  Rng rng(o.seed + 3);
  const std::size_t count = o.quick ? 10 : 50;
  ProblemShape shape;
  shape.preds_min = 4;
  std::size_t done = 0, subsets = 0, bad = 0, unsat_subsets = 0, semantic = 0;
  while (done < count) {
    Problem problem = random_problem(rng, shape);
    Engine engine(problem);
    std::vector<std::vector<PredId>> g;
    std::vector<Literal> g_lits;
    for (std::size_t atom : problem.predicates) {
      const LoweredLiteral& low = engine.lower(Literal{atom, true});
      if (!low.disjunctive() && g.size() < 8) {
        g.push_back(low.alternatives.front());
        g_lits.push_back(Literal{atom, true});
      }
    }
    std::vector<PredId> fixed(engine.bindings().begin(), engine.bindings().end());
    std::vector<Literal> e_lits;
    std::vector<Clause> goal = to_cnf(problem.goal);
    if (goal.size() != 1) continue;
    for (Literal l : goal.front()) {
      const LoweredLiteral& low = engine.lower(l.negated());
      if (low.disjunctive()) continue;
      fixed.insert(fixed.end(), low.alternatives.front().begin(), low.alternatives.front().end());
      e_lits.push_back(l.negated());
    }
    std::vector<PredId> all = fixed;
    for (const auto& v : g) all.insert(all.end(), v.begin(), v.end());
    TheorySplit split = split_theories(all, engine.preds(), engine.terms());
    if (split.euf.empty() || split.dif.empty() || g.empty()) continue;
    ++done;

    CircuitStore& store = engine.store();
    std::vector<Seed> seeds;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (PredId p : g[i]) seeds.push_back({p, store.mk_leaf(static_cast<std::uint32_t>(i))});
    for (PredId p : fixed) seeds.push_back({p, CircuitStore::kTrue});
    CombinedSdpResult r = sdp_combined(store, engine.terms(), engine.preds(), seeds);
    for_each_subset(store, r.root, g.size(), [&](std::uint64_t mask, bool unsat) {
      std::vector<PredId> facts = fixed;
      std::vector<Literal> lits = e_lits;
      for (std::size_t i = 0; i < g.size(); ++i)
        if ((mask >> i) & 1u) {
          facts.insert(facts.end(), g[i].begin(), g[i].end());
          lits.push_back(g_lits[i]);
        }
      bool dp_unsat = dp_combined(engine.terms(), engine.preds(), facts).verdict == Verdict::Unsat;
      bad += dp_unsat != unsat;
      if (std::popcount(mask) <= 3) {
        bad += dp_unsat == semantic_sat(problem, lits);
        ++semantic;
      }
      unsat_subsets += unsat;
      ++subsets;
    });
  }
  rep.passed = bad == 0;
  rep.detail = fmt("%zu mixed instances, %zu subsets (%zu unsat), %zu also by model search, %zu mismatches", done,
                   subsets, unsat_subsets, semantic, bad);
  return rep;
}

CriterionReport criterion4(const SuiteOptions& o) {
  CriterionReport rep = report(4, "abstraction equals brute-force enumeration of minterms");
  Rng rng(o.seed + 4);
  const std::size_t count = o.quick ? 15 : 50;
  std::size_t bad = 0, cubes = 0;
  for (std::size_t i = 0; i < count; ++i) {
    ProblemShape shape;
    shape.euf = i % 3 != 1;
    shape.dif = i % 3 != 0;
    shape.mixed_atoms = i % 3 == 2;
    Problem problem = random_problem(rng, shape);
    AbstractOptions opts;
    opts.keep_infeasible = true;
    AbstractionResult abs = abstract_formula(problem, opts);
    std::vector<Cube> brute = brute_force_Fp(problem, problem.goal);
    BddManager a(problem.predicates.size());
    BddManager b(problem.predicates.size());
    BddRef fa = cubes_bdd(a, abs.all_primes);
    BddRef fb = cubes_bdd(b, brute);
    if (!abs.exact || !bdd_equiv(a, fa, b, fb)) ++bad;
    cubes += abs.all_primes.size();
  }
  rep.passed = bad == 0;
  rep.detail = fmt("%zu problems, %zu prime implicants, %zu mismatches", count, cubes, bad);
  return rep;
}

CriterionReport criterion5(const SuiteOptions& o) {
  CriterionReport rep = report(5, "diamond chains: |P| = 5n-1, 2^n prime implicants, n=12 under 60 s");
  std::ostringstream detail;
  bool ok = true;
  const std::size_t max_n = o.quick ? 6 : 10;
  for (std::size_t n = 1; n <= max_n; ++n) {
    Problem p = gen_diamond(n);
    AbstractionResult r = abstract_formula(p);
    bool good = p.predicates.size() == 5 * n - 1 && r.cubes.size() == (std::size_t{1} << n) && r.exact;
    if (n <= 2) {
      std::vector<Cube> brute = brute_force_Fp(p, p.goal);
      BddManager a(p.predicates.size()), b(p.predicates.size());
      good = good && bdd_equiv(a, cubes_bdd(a, r.all_primes), b, cubes_bdd(b, brute));
    }
    good = good && check_implies_goal(p, r.cubes, p.goal);
    if (!good) detail << "n=" << n << " failed (" << r.cubes.size() << " cubes); ";
    ok = ok && good;
  }
  const std::size_t big = o.quick ? 8 : 12;
  auto t0 = Clock::now();
  AbstractionResult r = abstract_formula(gen_diamond(big));
  double secs = seconds_since(t0);
  ok = ok && r.cubes.size() == (std::size_t{1} << big) && (o.quick || secs < 60);
  detail << "n=1.." << max_n << " checked; n=" << big << ": " << r.cubes.size() << " primes ("
         << r.all_primes.size() << " before dropping unsatisfiable ones) in " << fmt("%.2f", secs) << " s";
  rep.passed = ok;
  rep.detail = detail.str();
  return rep;
}

CriterionReport criterion6(const SuiteOptions&) {
  CriterionReport rep = report(6, "disequality goal: exact mode keeps x != 5, approximation loses it");
  Problem p = parse_problem("(predicates (!= x 5))\n(goal (or (< x 5) (< 5 x)))\n");
  AbstractOptions exact;
  AbstractionResult a = abstract_formula(p, exact);
  AbstractOptions approx;
  approx.underapprox_disjunction = true;
  AbstractionResult b = abstract_formula(p, approx);
  bool exact_ok = a.exact && a.cubes.size() == 1 && a.cubes[0].size() == 1 && a.cubes[0][0].positive;
  bool approx_ok = !b.exact && b.cubes.empty();
  rep.passed = exact_ok && approx_ok;
  auto show = [&](const AbstractionResult& r) {
    std::string s = "{";
    for (const Cube& c : r.cubes) s += (s.size() > 1 ? ", " : "") + cube_text(p, c);
    return s + "}";
  };
  rep.detail = "exact " + show(a) + ", underapproximation " + show(b);
  return rep;
}

CriterionReport criterion7(const SuiteOptions& o) {
  CriterionReport rep = report(7, "saturated fact sets stay within their size bounds");
  Rng rng(o.seed + 7);
  const std::size_t count = o.quick ? 100 : 500;
  std::size_t bad = 0;
  double euf_ratio = 0, dif_ratio = 0;
  for (std::size_t i = 0; i < count; ++i) {
    FactInstance inst = random_euf(rng);
    std::vector<PredId> facts = concat(inst.g, negated(inst.preds, inst.e));
    auto t = make_theory(TheoryId::Euf, inst.terms, inst.preds, facts);
    DpResult r = dp_check(*t, facts);
    std::size_t m = static_cast<const EufTheory&>(*t).universe().size();
    std::size_t eqs = 0;
    for (PredId p : r.facts) eqs += inst.preds.at(p).kind == PredKind::Eq;
    std::size_t bound = m * (m - 1) / 2;
    bad += eqs > bound;
    euf_ratio = std::max(euf_ratio, static_cast<double>(eqs) / static_cast<double>(bound));
  }
  for (std::size_t i = 0; i < count; ++i) {
    FactInstance inst = random_dif(rng);
    std::vector<PredId> facts = concat(inst.g, negated(inst.preds, inst.e));
    auto t = make_theory(TheoryId::Dif, inst.terms, inst.preds, facts);
    DpResult r = dp_check(*t, facts);
    const DifBounds& b = static_cast<const DifTheory&>(*t).bounds();
    double bound = 2.0 * static_cast<double>(b.m * b.m) * (2.0 * boost::rational_cast<double>(b.cap) + 1.0);
    bad += static_cast<double>(r.facts.size()) > bound;
    dif_ratio = std::max(dif_ratio, static_cast<double>(r.facts.size()) / bound);
  }
  rep.passed = bad == 0;
  rep.detail = fmt("%zu EUF + %zu DIF runs, %zu violations, largest fill %.3f (EUF) %.3f (DIF)", count, count, bad,
                   euf_ratio, dif_ratio);
  return rep;
}

CriterionReport criterion8(const SuiteOptions&) {
  CriterionReport rep = report(8, "near-complete graphs need the full iteration schedule");
  std::ostringstream detail;
  bool ok = true;
  for (std::size_t n = 3; n <= 6; ++n) {
    FactInstance inst = near_complete_graph(n);
    std::vector<PredId> ebar = negated(inst.preds, inst.e);
    std::vector<PredId> context = concat(inst.g, ebar);
    const std::size_t depth = static_cast<std::size_t>(std::bit_width(n - 2));  // ceil(lg(n-1))

    std::vector<PredId> chain(inst.g.begin(), inst.g.begin() + static_cast<std::ptrdiff_t>(n - 1));
    auto chain_theory = make_theory(TheoryId::Euf, inst.terms, inst.preds, chain);
    DpOptions traced;
    traced.record_trace = true;
    DpResult dp = dp_check(*chain_theory, chain, traced);
    std::size_t first = 0;
    for (std::size_t k = 0; k < dp.trace.size() && first == 0; ++k)
      if (std::find(dp.trace[k].begin(), dp.trace[k].end(), inst.e.front()) != dp.trace[k].end()) first = k + 1;

    std::vector<bool> chain_set(inst.g.size(), false);
    for (std::size_t i = 0; i + 1 < n; ++i) chain_set[i] = true;
    auto run = [&](SdpOptions opts) {
      auto t = make_theory(TheoryId::Euf, inst.terms, inst.preds, context);
      CircuitStore store;
      std::vector<Seed> seeds;
      for (std::size_t i = 0; i < inst.g.size(); ++i)
        seeds.push_back({inst.g[i], store.mk_leaf(static_cast<std::uint32_t>(i))});
      for (PredId p : ebar) seeds.push_back({p, CircuitStore::kTrue});
      SdpResult r = sdp(store, *t, seeds, opts);
      return eval_expr(store, r.root, chain_set);
    };
    bool full = run({});
    SdpOptions cut;
    cut.iterations = depth - 1;
    bool truncated = run(cut);
    SdpOptions stable;
    stable.stop_when_w_stable = true;
    bool stopped = run(stable);
    bool good = full && !truncated && first == depth && (n < 6 || !stopped);
    ok = ok && good;
    detail << "n=" << n << ": chain at depth " << first << ", full " << full << ", " << depth - 1 << " iterations "
           << truncated << ", stop-when-stable " << stopped << "; ";
  }
  rep.passed = ok;
  rep.detail = detail.str();
  return rep;
}

CriterionReport criterion9(const SuiteOptions& o) {
  CriterionReport rep = report(9, "throughput on synthetic mixed queries (informational)");
  Rng rng(o.seed + 9);
  const std::size_t count = o.quick ? 20 : 200;
  std::size_t cubes = 0;
  auto t0 = Clock::now();
  for (std::size_t i = 0; i < count; ++i) cubes += abstract_formula(random_problem(rng)).cubes.size();
  double secs = seconds_since(t0);
  rep.passed = true;
  rep.detail = fmt("%zu abstraction queries in %.2f s (%.1f per second), %zu cubes", count, secs,
                   static_cast<double>(count) / secs, cubes);
  return rep;
}

}  // namespace

CriterionReport run_criterion(int id, const SuiteOptions& options) {
  using Fn = CriterionReport (*)(const SuiteOptions&);
  static const Fn table[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                             criterion6, criterion7, criterion8, criterion9};
  if (id < 1 || id > 9) throw std::out_of_range("no criterion " + std::to_string(id));
  auto t0 = Clock::now();
  CriterionReport rep;
  try {
    rep = table[id - 1](options);
  } catch (const std::exception& e) {
    rep.id = id;
    rep.passed = false;
    rep.detail = std::string("exception: ") + e.what();
  }
  if (rep.title.empty()) rep.title = "criterion " + std::to_string(id);
  rep.seconds = seconds_since(t0);
  static const double limits[] = {300, 120, 300, 0, 0, 0, 0, 0, 0};
  if (!options.quick && limits[id - 1] > 0 && rep.seconds > limits[id - 1]) {
    rep.passed = false;
    rep.detail += fmt(" (over the %.0f s budget)", limits[id - 1]);
  }
  return rep;
}

}  // namespace sdpabs::testing
