#include "sdpabs/nelson_oppen.hpp"

#include <algorithm>
#include <map>

namespace sdpabs {

namespace {

void variables_below(TermId t, const TermTable& terms, std::vector<TermId>& out) {
  const Term& term = terms.at(t);
  if (term.is_var()) {
    out.push_back(t);
    return;
  }
  for (TermId a : term.args) variables_below(a, terms, out);
}

void sort_unique(std::vector<TermId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t round_count(const CombinedOptions& options, const TheorySplit& split) {
  return options.rounds.value_or(std::max<std::size_t>(1, split.shared.size()));
}

}  // namespace

TheorySplit split_theories(std::span<const PredId> g, const PredicateTable& preds, const TermTable& terms) {
  TheorySplit split;
  std::vector<TermId> euf_vars, dif_vars;
  for (PredId p : g) {
    const Predicate& q = preds.at(p);
    if (q.is_euf()) {
      split.euf.push_back(p);
      variables_below(q.lhs, terms, euf_vars);
      variables_below(q.rhs, terms, euf_vars);
    } else {
      split.dif.push_back(p);
      dif_vars.push_back(q.lhs);
      dif_vars.push_back(q.rhs);
    }
  }
  sort_unique(euf_vars);
  sort_unique(dif_vars);
  std::set_intersection(euf_vars.begin(), euf_vars.end(), dif_vars.begin(), dif_vars.end(),
                        std::back_inserter(split.shared));
  return split;
}

CombinedDpResult dp_combined(const TermTable& terms, PredicateTable& preds, std::span<const PredId> g,
                             CombinedOptions options) {
  const TheorySplit split = split_theories(g, preds, terms);
  const std::size_t rounds = round_count(options, split);
  CombinedDpResult result;
  std::vector<SharedPair> delta;

  for (std::size_t r = 0; r < rounds; ++r) {
    ++result.rounds;
    bool grew = false;
    for (TheoryId id : {TheoryId::Euf, TheoryId::Dif}) {
      std::vector<PredId> facts = id == TheoryId::Euf ? split.euf : split.dif;
      for (const SharedPair& d : delta)
        for (PredId p : import_equality(id, d.x, d.y, preds)) facts.push_back(p);
      auto theory = make_theory(id, terms, preds, facts, options.theory);
      DpOptions dp;
      dp.stop_at_fixpoint = options.stop_at_fixpoint;
      DpResult run = dp_check(*theory, facts, dp);
      if (run.verdict == Verdict::Unsat) {
        result.verdict = Verdict::Unsat;
        result.delta = delta;
        return result;
      }
      FactSet w;
      for (PredId p : run.facts) w.insert(p);
      for (const SharedEquality& e : theory->shared_equalities(w, split.shared)) {
        SharedPair d{e.x, e.y};
        if (std::find(delta.begin(), delta.end(), d) == delta.end()) {
          delta.push_back(d);
          grew = true;
        }
      }
    }
    if (!grew) break;
  }
  result.verdict = Verdict::Sat;
  result.delta = delta;
  return result;
}

CombinedSdpResult sdp_combined(CircuitStore& store, const TermTable& terms, PredicateTable& preds,
                               std::span<const Seed> seeds, CombinedOptions options) {
  std::vector<PredId> all;
  for (const Seed& s : seeds) all.push_back(s.pred);
  const TheorySplit split = split_theories(all, preds, terms);
  const std::size_t rounds = round_count(options, split);

  std::vector<Seed> own[2];
  for (const Seed& s : seeds) own[preds.at(s.pred).is_euf() ? 0 : 1].push_back(s);

  CombinedSdpResult result;
  std::map<SharedPair, std::size_t> psi_index;
  CircuitRef psi_e = CircuitStore::kFalse;

  for (std::size_t r = 0; r < rounds; ++r) {
    ++result.rounds;
    for (TheoryId id : {TheoryId::Euf, TheoryId::Dif}) {
      std::vector<Seed> local = own[id == TheoryId::Euf ? 0 : 1];
      for (const auto& [d, psi] : result.psi)
        for (PredId p : import_equality(id, d.x, d.y, preds)) local.push_back({p, psi});
      std::vector<PredId> context;
      for (const Seed& s : local) context.push_back(s.pred);
      auto theory = make_theory(id, terms, preds, context, options.theory);

      SdpResult run = sdp(store, *theory, local);
      result.derivations += run.derivations;
      psi_e = store.mk_or(psi_e, run.root);

      FactSet w;
      for (PredId p : run.facts) w.insert(p);
      for (const SharedEquality& e : theory->shared_equalities(w, split.shared)) {
        std::vector<CircuitRef> parts;
        for (PredId a : e.antecedents) parts.push_back(run.top(a));
        CircuitRef way = store.mk_and(std::move(parts));
        SharedPair d{e.x, e.y};
        auto [it, inserted] = psi_index.try_emplace(d, result.psi.size());
        if (inserted)
          result.psi.emplace_back(d, way);
        else
          result.psi[it->second].second = store.mk_or(result.psi[it->second].second, way);
      }
    }
  }
  result.root = psi_e;
  return result;
}

}  // namespace sdpabs
