#include "sdpabs/dif.hpp"

#include <algorithm>
#include <bit>

namespace sdpabs {

DifBounds dif_bounds(std::span<const PredId> g, const PredicateTable& preds) {
  DifBounds b;
  std::vector<TermId> vars;
  Rational sum = 0;
  for (PredId p : g) {
    const Predicate& q = preds.at(p);
    if (!q.is_dif()) continue;
    vars.push_back(q.lhs);
    vars.push_back(q.rhs);
    b.c_max = std::max(b.c_max, abs(q.offset));
    sum += abs(q.offset);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  b.m = vars.size();
  Rational spread = b.m == 0 ? Rational(0) : Rational(static_cast<std::int64_t>(b.m - 1)) * b.c_max;
  b.cap = std::min(spread, sum);
  return b;
}

std::size_t dif_depth_bound(std::size_t m) {
  if (m <= 2) return 1;
  return std::bit_width(m - 1);  // ceil(log2 m)
}

DifTheory::DifTheory(const TermTable& terms, PredicateTable& preds, std::span<const PredId> context,
                     bool prune)
    : Theory(terms, preds), bounds_(dif_bounds(context, preds)), prune_(prune) {}

void DifTheory::infer(const FactSet& w, std::size_t new_from, DerivationSink& out) {
  const auto items = w.items();
  out_.assign(terms_.size(), {});
  in_.assign(terms_.size(), {});
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Predicate& g = preds_.at(items[i]);
    if (!g.is_dif()) continue;
    out_[g.lhs.index].push_back({g.rhs, items[i], i});
    in_[g.rhs.index].push_back({g.lhs, items[i], i});
  }

  auto join = [&](PredId first, PredId second) {
    const Predicate& a = preds_.at(first);
    const Predicate& b = preds_.at(second);
    if (a.lhs == b.rhs) return;  // would be a self-loop
    Rational c = a.offset + b.offset;
    if (prune_ && abs(c) > bounds_.cap) return;
    bool strict = a.strict() || b.strict();
    Predicate concl = strict ? Predicate::lt(a.lhs, b.rhs, c) : Predicate::le(a.lhs, b.rhs, c);
    PredId ants[2] = {first, second};
    out.derive(preds_.intern(concl), ants);
  };

  // Pairs with a new first premise, then pairs whose only new premise is the second.
  for (std::size_t i = new_from; i < items.size(); ++i) {
    const Predicate& g = preds_.at(items[i]);
    if (!g.is_dif()) continue;
    for (const Edge& e : out_[g.rhs.index]) join(items[i], e.pred);
  }
  for (std::size_t i = new_from; i < items.size(); ++i) {
    const Predicate& g = preds_.at(items[i]);
    if (!g.is_dif()) continue;
    for (const Edge& e : in_[g.lhs.index])
      if (e.pos < new_from) join(e.pred, items[i]);
  }
}

namespace {

bool illegal(const Predicate& a, const Predicate& b) {
  Rational sum = a.offset + b.offset;
  return (a.strict() || b.strict()) ? sum <= 0 : sum < 0;
}

}  // namespace

void DifTheory::contradictions(const FactSet& w, ContradictionSink& out) const {
  std::vector<std::vector<PredId>> outgoing(terms_.size());
  for (PredId p : w.items()) {
    const Predicate& g = preds_.at(p);
    if (g.is_dif()) outgoing[g.lhs.index].push_back(p);
  }
  for (PredId p : w.items()) {
    const Predicate& a = preds_.at(p);
    if (!a.is_dif()) continue;
    if (a.lhs == a.rhs) {
      if (illegal(a, Predicate::le(a.lhs, a.lhs, 0))) {
        PredId single[1] = {p};
        out.contradiction(single);
      }
      continue;
    }
    if (a.rhs < a.lhs) continue;  // each 2-cycle once, from its smaller source
    for (PredId q : outgoing[a.rhs.index]) {
      const Predicate& b = preds_.at(q);
      if (b.rhs != a.lhs || !illegal(a, b)) continue;
      PredId pair[2] = {p, q};
      out.contradiction(pair);
    }
  }
}

std::vector<SharedEquality> DifTheory::shared_equalities(const FactSet& w,
                                                         std::span<const TermId> shared) const {
  std::vector<SharedEquality> out;
  for (PredId p : w.items()) {
    const Predicate& g = preds_.at(p);
    if (g.kind != PredKind::Le || g.offset != 0 || !(g.lhs < g.rhs)) continue;
    if (!std::binary_search(shared.begin(), shared.end(), g.lhs) ||
        !std::binary_search(shared.begin(), shared.end(), g.rhs))
      continue;
    auto back = preds_.find(Predicate::le(g.rhs, g.lhs, 0));
    if (back && w.contains(*back)) out.push_back({g.lhs, g.rhs, {p, *back}});
  }
  return out;
}

namespace {

struct Weight {
  Rational c;
  long strict = 0;  // number of strict edges, counted negatively

  friend Weight operator+(const Weight& a, const Weight& b) { return {a.c + b.c, a.strict + b.strict}; }
  friend bool operator<(const Weight& a, const Weight& b) {
    return a.c != b.c ? a.c < b.c : a.strict < b.strict;
  }
};

}  // namespace

bool negative_cycle_sat(std::span<const PredId> g, const PredicateTable& preds) {
  std::vector<TermId> vars;
  struct Arc {
    std::size_t from, to;
    Weight w;
  };
  std::vector<Arc> arcs;
  for (PredId p : g) {
    const Predicate& q = preds.at(p);
    if (!q.is_dif()) continue;
    vars.push_back(q.lhs);
    vars.push_back(q.rhs);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  auto idx = [&](TermId t) {
    return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), t) - vars.begin());
  };
  // x <= y + c  is  dist(x) <= dist(y) + c: an arc y -> x.
  for (PredId p : g) {
    const Predicate& q = preds.at(p);
    if (!q.is_dif()) continue;
    arcs.push_back({idx(q.rhs), idx(q.lhs), Weight{q.offset, q.strict() ? -1 : 0}});
  }
  std::vector<Weight> dist(vars.size());
  for (std::size_t round = 0; round <= vars.size(); ++round) {
    bool changed = false;
    for (const Arc& a : arcs) {
      Weight cand = dist[a.from] + a.w;
      if (cand < dist[a.to]) {
        dist[a.to] = cand;
        changed = true;
      }
    }
    if (!changed) return true;
  }
  return false;
}

}  // namespace sdpabs
