#include "sdpabs/engine.hpp"

#include "sdpabs/euf.hpp"

namespace sdpabs {

Verdict decide_facts(const TermTable& terms, PredicateTable& preds, std::span<const PredId> facts,
                     bool stop_at_fixpoint, TheoryOptions theory) {
  TheorySplit split = split_theories(facts, preds, terms);
  DpOptions dp;
  dp.stop_at_fixpoint = stop_at_fixpoint;
  if (split.dif.empty()) {
    auto t = make_theory(TheoryId::Euf, terms, preds, facts, theory);
    return dp_check(*t, facts, dp).verdict;
  }
  if (split.euf.empty()) {
    auto t = make_theory(TheoryId::Dif, terms, preds, facts, theory);
    return dp_check(*t, facts, dp).verdict;
  }
  CombinedOptions options;
  options.theory = theory;
  options.stop_at_fixpoint = stop_at_fixpoint;
  return dp_combined(terms, preds, facts, options).verdict;
}

SymbolicRun symbolic_facts(CircuitStore& store, const TermTable& terms, PredicateTable& preds,
                           std::span<const Seed> seeds, SdpOptions options, TheoryOptions theory) {
  std::vector<PredId> facts;
  for (const Seed& s : seeds) facts.push_back(s.pred);
  TheorySplit split = split_theories(facts, preds, terms);
  SymbolicRun run;
  if (split.dif.empty() || split.euf.empty()) {
    TheoryId id = split.dif.empty() ? TheoryId::Euf : TheoryId::Dif;
    auto t = make_theory(id, terms, preds, facts, theory);
    SdpResult r = sdp(store, *t, seeds, options);
    run.root = r.root;
    run.derivations = r.derivations;
    run.iterations = r.iterations;
    return run;
  }
  CombinedOptions combined;
  combined.theory = theory;
  CombinedSdpResult r = sdp_combined(store, terms, preds, seeds, combined);
  run.root = r.root;
  run.derivations = r.derivations;
  run.iterations = r.rounds;
  return run;
}

Engine::Engine(const Problem& problem, EngineOptions options)
    : problem_(problem), options_(options), lowering_(terms_, preds_) {
  lowering_.reserve_symbols(problem_);
  lowered_.reserve(2 * problem_.atoms.size());
  for (const Atom& atom : problem_.atoms) {
    lowered_.push_back(lowering_.lower(atom, true));
    lowered_.push_back(lowering_.lower(atom, false));
  }
  bindings_ = lowering_.binding_predicates();
}

const LoweredLiteral& Engine::lower(Literal l) const { return lowered_[2 * l.atom + (l.positive ? 0 : 1)]; }

namespace {

/// Mixed-radix counter over the alternatives of the disjunctive items.
class CaseCounter {
 public:
  explicit CaseCounter(std::vector<std::size_t> radix) : radix_(std::move(radix)), digit_(radix_.size(), 0) {}

  std::size_t operator[](std::size_t i) const { return digit_[i]; }

  bool next() {
    for (std::size_t i = 0; i < digit_.size(); ++i) {
      if (++digit_[i] < radix_[i]) return true;
      digit_[i] = 0;
    }
    return false;
  }

 private:
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> digit_;
};

}  // namespace

Verdict Engine::decide(std::span<const Literal> literals) {
  std::vector<const LoweredLiteral*> split;
  std::vector<PredId> base(bindings_.begin(), bindings_.end());
  for (Literal l : literals) {
    const LoweredLiteral& low = lower(l);
    if (low.disjunctive())
      split.push_back(&low);
    else
      base.insert(base.end(), low.alternatives.front().begin(), low.alternatives.front().end());
  }
  std::vector<std::size_t> radix;
  for (const LoweredLiteral* low : split) radix.push_back(low->alternatives.size());
  CaseCounter counter(radix);
  do {
    std::vector<PredId> facts = base;
    for (std::size_t i = 0; i < split.size(); ++i) {
      const auto& alt = split[i]->alternatives[counter[i]];
      facts.insert(facts.end(), alt.begin(), alt.end());
    }
    if (decide_facts(terms_, preds_, facts, options_.stop_at_fixpoint, options_.theory) == Verdict::Sat)
      return Verdict::Sat;
  } while (counter.next());
  return Verdict::Unsat;
}

SymbolicOutcome Engine::symbolic(std::span<const LeafLiteral> g, std::span<const Literal> assumed,
                                 SdpOptions options) {
  SymbolicOutcome out;
  struct Item {
    const LoweredLiteral* low;
    CircuitRef expr;
  };
  std::vector<Seed> base;
  for (PredId p : bindings_) base.push_back({p, CircuitStore::kTrue});
  std::vector<Item> split;
  auto add = [&](const LoweredLiteral& low, CircuitRef expr) {
    if (low.disjunctive()) {
      split.push_back({&low, expr});
      return;
    }
    for (PredId p : low.alternatives.front()) base.push_back({p, expr});
  };
  for (const LeafLiteral& l : g) add(lower(l.literal), l.leaf);
  for (Literal l : assumed) add(lower(l), CircuitStore::kTrue);

  std::size_t cases = 1;
  for (const Item& it : split) {
    cases *= it.low->alternatives.size();
    if (cases > options_.case_cap) break;
  }
  if (cases > options_.case_cap) {
    out.exact = false;
    for (const LeafLiteral& l : g)
      if (lower(l.literal).disjunctive()) out.omitted.push_back(problem_.literal_str(l.literal));
    for (Literal l : assumed)
      if (lower(l).disjunctive()) out.omitted.push_back(problem_.literal_str(l));
    split.clear();
    cases = 1;
  }
  out.cases = cases;

  std::vector<std::size_t> radix;
  for (const Item& it : split) radix.push_back(it.low->alternatives.size());
  CaseCounter counter(radix);
  std::vector<CircuitRef> roots;
  do {
    std::vector<Seed> seeds = base;
    for (std::size_t i = 0; i < split.size(); ++i)
      for (PredId p : split[i].low->alternatives[counter[i]]) seeds.push_back({p, split[i].expr});
    SymbolicRun run = symbolic_facts(store_, terms_, preds_, seeds, options, options_.theory);
    out.derivations += run.derivations;
    roots.push_back(run.root);
  } while (counter.next());
  out.root = store_.mk_and(std::move(roots));
  return out;
}

}  // namespace sdpabs
