#include "sdpabs/euf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sdpabs {

EufTheory::EufTheory(const TermTable& terms, PredicateTable& preds, std::span<const PredId> context)
    : Theory(terms, preds) {
  std::vector<PredId> euf;
  for (PredId p : context)
    if (preds.at(p).is_euf()) euf.push_back(p);
  universe_ = terms_of(euf, preds, terms);
  allowed_.assign(terms.size(), 0);
  std::map<std::pair<std::string, std::size_t>, std::size_t> group_of;
  for (TermId t : universe_) {
    allowed_[t.index] = 1;
    const Term& term = terms.at(t);
    if (term.is_var()) continue;
    auto [it, inserted] = group_of.try_emplace({term.symbol, term.args.size()}, app_groups_.size());
    if (inserted) app_groups_.emplace_back();
    app_groups_[it->second].push_back(t);
  }
}

void EufTheory::infer(const FactSet& w, std::size_t new_from, DerivationSink& out) {
  const auto items = w.items();
  adjacency_.assign(terms_.size(), {});
  for (PredId p : items) {
    const Predicate& g = preds_.at(p);
    if (g.kind != PredKind::Eq || g.lhs == g.rhs) continue;
    adjacency_[g.lhs.index].push_back({g.rhs, p});
    adjacency_[g.rhs.index].push_back({g.lhs, p});
  }

  // Transitivity: two distinct equalities meeting in `mid`. Each unordered
  // pair is emitted once, from its later-inserted member.
  for (std::size_t i = new_from; i < items.size(); ++i) {
    PredId e = items[i];
    const Predicate& g = preds_.at(e);
    if (g.kind != PredKind::Eq || g.lhs == g.rhs) continue;
    for (TermId mid : {g.lhs, g.rhs}) {
      TermId far = mid == g.lhs ? g.rhs : g.lhs;
      for (auto [other, q] : adjacency_[mid.index]) {
        if (q == e) continue;
        std::size_t qpos = w.position(q);
        if (qpos >= new_from && qpos > i) continue;
        if (!in_universe(far) || !in_universe(other)) continue;
        PredId concl = preds_.intern(Predicate::eq(far, other));
        PredId ants[2] = {q, e};
        out.derive(concl, ants);
      }
    }
  }

  // Congruence over same-symbol applications of the universe.
  std::vector<PredId> ants;
  for (const auto& group : app_groups_) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        const Term& s = terms_.at(group[a]);
        const Term& t = terms_.at(group[b]);
        ants.clear();
        bool ok = true;
        bool fresh = false;
        for (std::size_t k = 0; k < s.args.size() && ok; ++k) {
          if (s.args[k] == t.args[k]) continue;
          auto id = preds_.find(Predicate::eq(s.args[k], t.args[k]));
          ok = id && w.contains(*id);
          if (!ok) break;
          if (std::find(ants.begin(), ants.end(), *id) == ants.end()) ants.push_back(*id);
          if (w.position(*id) >= new_from) fresh = true;
        }
        if (!ok || !fresh) continue;
        PredId concl = preds_.intern(Predicate::eq(group[a], group[b]));
        out.derive(concl, ants);
      }
    }
  }
}

void EufTheory::contradictions(const FactSet& w, ContradictionSink& out) const {
  for (PredId p : w.items()) {
    const Predicate& g = preds_.at(p);
    if (g.kind != PredKind::Ne) continue;
    if (g.lhs == g.rhs) {
      PredId single[1] = {p};
      out.contradiction(single);
      continue;
    }
    auto eq = preds_.find(Predicate::eq(g.lhs, g.rhs));
    if (eq && w.contains(*eq)) {
      PredId pair[2] = {*eq, p};
      out.contradiction(pair);
    }
  }
}

std::vector<SharedEquality> EufTheory::shared_equalities(const FactSet& w,
                                                         std::span<const TermId> shared) const {
  std::vector<SharedEquality> out;
  for (PredId p : w.items()) {
    const Predicate& g = preds_.at(p);
    if (g.kind != PredKind::Eq || g.lhs == g.rhs) continue;
    if (!std::binary_search(shared.begin(), shared.end(), g.lhs) ||
        !std::binary_search(shared.begin(), shared.end(), g.rhs))
      continue;
    out.push_back({g.lhs, g.rhs, {p}});
  }
  return out;
}

std::size_t euf_depth_bound(std::span<const PredId> g, const PredicateTable& preds,
                            const TermTable& terms) {
  std::vector<PredId> euf;
  for (PredId p : g)
    if (preds.at(p).is_euf()) euf.push_back(p);
  return 3 * terms_of(euf, preds, terms).size();
}

namespace {

class CongruenceClosure {
 public:
  CongruenceClosure(const TermTable& terms, std::span<const TermId> universe)
      : terms_(terms), parent_(terms.size()), uses_(terms.size()) {
    std::iota(parent_.begin(), parent_.end(), 0u);
    for (TermId t : universe) {
      for (TermId a : terms.at(t).args) {
        auto& u = uses_[a.index];
        if (std::find(u.begin(), u.end(), t.index) == u.end()) u.push_back(t.index);
      }
    }
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void merge(std::uint32_t s, std::uint32_t t) {
    std::uint32_t rs = find(s), rt = find(t);
    if (rs == rt) return;
    std::vector<std::uint32_t> ps = uses_[rs], pt = uses_[rt];
    parent_[rs] = rt;
    uses_[rt].insert(uses_[rt].end(), ps.begin(), ps.end());
    for (std::uint32_t x : ps)
      for (std::uint32_t y : pt)
        if (find(x) != find(y) && congruent(x, y)) merge(x, y);
  }

 private:
  bool congruent(std::uint32_t x, std::uint32_t y) {
    const Term& a = terms_.at(TermId{x});
    const Term& b = terms_.at(TermId{y});
    if (a.symbol != b.symbol || a.args.size() != b.args.size()) return false;
    for (std::size_t k = 0; k < a.args.size(); ++k)
      if (find(a.args[k].index) != find(b.args[k].index)) return false;
    return true;
  }

  const TermTable& terms_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::vector<std::uint32_t>> uses_;
};

}  // namespace

bool congruence_closure_sat(std::span<const PredId> g, const PredicateTable& preds,
                            const TermTable& terms) {
  std::vector<TermId> universe = terms_of(g, preds, terms);
  CongruenceClosure cc(terms, universe);
  for (PredId p : g) {
    const Predicate& q = preds.at(p);
    if (q.kind == PredKind::Eq) cc.merge(q.lhs.index, q.rhs.index);
  }
  for (PredId p : g) {
    const Predicate& q = preds.at(p);
    if (q.kind == PredKind::Ne && cc.find(q.lhs.index) == cc.find(q.rhs.index)) return false;
  }
  return true;
}

}  // namespace sdpabs
