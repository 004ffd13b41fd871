#include "sdpabs/sdp.hpp"

#include <algorithm>

namespace sdpabs {

std::vector<Seed> merge_seeds(CircuitStore& store, std::span<const Seed> seeds) {
  std::vector<Seed> sorted(seeds.begin(), seeds.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const Seed& a, const Seed& b) { return a.pred < b.pred; });
  std::vector<Seed> out;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    std::vector<CircuitRef> exprs;
    while (j < sorted.size() && sorted[j].pred == sorted[i].pred) exprs.push_back(sorted[j++].expr);
    out.push_back({sorted[i].pred, store.mk_or(std::move(exprs))});
    i = j;
  }
  // Keep first-occurrence order for a deterministic W.
  std::vector<Seed> ordered;
  std::vector<char> done;
  for (const Seed& s : seeds) {
    if (s.pred.index >= done.size()) done.resize(s.pred.index + 1, 0);
    if (done[s.pred.index]) continue;
    done[s.pred.index] = 1;
    auto it = std::lower_bound(out.begin(), out.end(), s.pred,
                               [](const Seed& a, PredId p) { return a.pred < p; });
    ordered.push_back(*it);
  }
  return ordered;
}

namespace {

class Accumulate final : public DerivationSink {
 public:
  Accumulate(CircuitStore& store, const std::vector<CircuitRef>& prev, std::vector<std::vector<CircuitRef>>& s,
             std::vector<PredId>& touched)
      : store_(store), prev_(prev), s_(s), touched_(touched) {}

  void derive(PredId conclusion, std::span<const PredId> ants) override {
    ++count;
    std::vector<CircuitRef> parts;
    parts.reserve(ants.size());
    for (PredId a : ants) parts.push_back(prev_[a.index]);
    CircuitRef conj = store_.mk_and(std::move(parts));
    if (conclusion.index >= s_.size()) s_.resize(conclusion.index + 1);
    auto& bucket = s_[conclusion.index];
    if (bucket.empty()) touched_.push_back(conclusion);
    bucket.push_back(conj);
  }

  std::size_t count = 0;

 private:
  CircuitStore& store_;
  const std::vector<CircuitRef>& prev_;
  std::vector<std::vector<CircuitRef>>& s_;
  std::vector<PredId>& touched_;
};

class Roots final : public ContradictionSink {
 public:
  Roots(CircuitStore& store, const std::vector<CircuitRef>& tops, std::vector<CircuitRef>& out)
      : store_(store), tops_(tops), out_(out) {}

  void contradiction(std::span<const PredId> ants) override {
    std::vector<CircuitRef> parts;
    for (PredId a : ants) parts.push_back(tops_[a.index]);
    out_.push_back(store_.mk_and(std::move(parts)));
  }

 private:
  CircuitStore& store_;
  const std::vector<CircuitRef>& tops_;
  std::vector<CircuitRef>& out_;
};

}  // namespace

SdpResult sdp(CircuitStore& store, Theory& theory, std::span<const Seed> seeds, SdpOptions options) {
  SdpResult result;
  FactSet w;
  std::vector<CircuitRef>& cur = result.tops;
  auto ensure = [&](std::size_t n) {
    if (cur.size() < n) cur.resize(n, CircuitStore::kFalse);
  };

  for (const Seed& s : merge_seeds(store, seeds)) {
    if (s.expr == CircuitStore::kFalse) continue;
    ensure(s.pred.index + 1);
    cur[s.pred.index] = s.expr;
    w.insert(s.pred);
  }
  if (options.record_levels) result.levels.push_back(cur);

  const std::size_t bound = options.iterations.value_or(theory.depth_bound());
  std::vector<std::vector<CircuitRef>> s;
  std::vector<PredId> touched;
  for (std::size_t i = 0; i < bound; ++i) {
    const std::vector<CircuitRef> prev = cur;
    const std::size_t before = w.size();
    touched.clear();
    Accumulate sink(store, prev, s, touched);
    theory.infer(w, 0, sink);
    result.derivations += sink.count;
    ensure(theory.preds().size());
    for (PredId g : touched) {
      std::vector<CircuitRef> disjuncts = std::move(s[g.index]);
      s[g.index].clear();
      if (g.index < prev.size()) disjuncts.push_back(prev[g.index]);
      cur[g.index] = store.mk_or(std::move(disjuncts));
      w.insert(g);
    }
    ++result.iterations;
    if (options.record_levels) result.levels.push_back(cur);
    if (options.stop_when_w_stable && w.size() == before) break;
  }
  ensure(theory.preds().size());

  std::vector<CircuitRef> conflicts;
  Roots sink(store, cur, conflicts);
  theory.contradictions(w, sink);
  result.root = store.mk_or(std::move(conflicts));
  result.facts.assign(w.items().begin(), w.items().end());
  return result;
}

}  // namespace sdpabs
