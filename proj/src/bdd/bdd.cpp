#include "sdpabs/bdd.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sdpabs/error.hpp"

namespace sdpabs {

namespace {

constexpr std::uint32_t kTerminalVar = 0xffffffffu;
enum Op { kAnd = 0, kOr = 1, kNot = 2 };

std::vector<std::uint32_t> identity_order(std::size_t n) {
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  return order;
}

std::size_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = a * 0x9e3779b97f4a7c15ull;
  h ^= b + 0x7f4a7c159e3779b9ull + (h << 6) + (h >> 2);
  h ^= c + 0x94d049bb133111ebull + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

}  // namespace

BddManager::BddManager(std::size_t num_vars, std::size_t node_cap, unsigned cache_bits)
    : BddManager(identity_order(num_vars), node_cap, cache_bits) {}

BddManager::BddManager(std::vector<std::uint32_t> order, std::size_t node_cap, unsigned cache_bits)
    : node_cap_(node_cap), level_of_(order.size()), var_at_(std::move(order)) {
  for (std::uint32_t l = 0; l < var_at_.size(); ++l) level_of_[var_at_[l]] = l;
  var_ = {kTerminalVar, kTerminalVar};
  lo_ = {0, 1};
  hi_ = {0, 1};
  unique_.assign(1024, 0);
  cache_.resize(std::size_t{1} << cache_bits);
  cache_mask_ = cache_.size() - 1;
}

std::uint32_t BddManager::level(BddRef r) const {
  return is_terminal(r) ? static_cast<std::uint32_t>(num_vars()) : level_of_[var_[r.index]];
}

std::size_t BddManager::slot(std::uint32_t v, std::uint32_t lo, std::uint32_t hi) const {
  return mix(v, lo, hi) & (unique_.size() - 1);
}

void BddManager::grow() {
  unique_.assign(unique_.size() * 2, 0);
  const std::size_t mask = unique_.size() - 1;
  for (std::uint32_t n = 2; n < var_.size(); ++n) {
    std::size_t h = slot(var_[n], lo_[n], hi_[n]);
    while (unique_[h] != 0) h = (h + 1) & mask;
    unique_[h] = n;
  }
}

BddRef BddManager::mk(std::uint32_t v, BddRef lo, BddRef hi) {
  if (lo == hi) return lo;
  const std::size_t mask = unique_.size() - 1;
  std::size_t h = slot(v, lo.index, hi.index);
  while (unique_[h] != 0) {
    std::uint32_t n = unique_[h];
    if (var_[n] == v && lo_[n] == lo.index && hi_[n] == hi.index) return BddRef{n};
    h = (h + 1) & mask;
  }
  if (var_.size() >= node_cap_) throw NodeLimit("BDD exceeds " + std::to_string(node_cap_) + " nodes");
  auto n = static_cast<std::uint32_t>(var_.size());
  var_.push_back(v);
  lo_.push_back(lo.index);
  hi_.push_back(hi.index);
  unique_[h] = n;
  if (++used_ * 2 > unique_.size()) grow();
  return BddRef{n};
}

BddRef BddManager::var(std::uint32_t v) { return mk(v, kZero, kOne); }
BddRef BddManager::nvar(std::uint32_t v) { return mk(v, kOne, kZero); }
BddRef BddManager::land(BddRef a, BddRef b) { return apply(kAnd, a, b); }
BddRef BddManager::lor(BddRef a, BddRef b) { return apply(kOr, a, b); }
BddRef BddManager::lnot(BddRef a) { return apply(kNot, a, kZero); }

BddRef BddManager::apply(int op, BddRef a, BddRef b) {
  switch (op) {
    case kAnd:
      if (a == kZero || b == kZero) return kZero;
      if (a == kOne) return b;
      if (b == kOne || a == b) return a;
      if (b < a) std::swap(a, b);
      break;
    case kOr:
      if (a == kOne || b == kOne) return kOne;
      if (a == kZero) return b;
      if (b == kZero || a == b) return a;
      if (b < a) std::swap(a, b);
      break;
    case kNot:
      if (a == kZero) return kOne;
      if (a == kOne) return kZero;
      break;
  }
  CacheEntry& e = cache_[mix(static_cast<std::uint64_t>(op), a.index, b.index) & cache_mask_];
  if (e.op == op && e.a == a.index && e.b == b.index) return BddRef{e.result};

  std::uint32_t la = level(a), lb = op == kNot ? level(a) : level(b);
  std::uint32_t top = std::min(la, lb);
  std::uint32_t v = var_at_[top];
  BddRef a0 = la == top ? low(a) : a, a1 = la == top ? high(a) : a;
  BddRef r;
  if (op == kNot) {
    BddRef r0 = apply(kNot, a0, kZero);
    BddRef r1 = apply(kNot, a1, kZero);
    r = mk(v, r0, r1);
  } else {
    BddRef b0 = lb == top ? low(b) : b, b1 = lb == top ? high(b) : b;
    BddRef r0 = apply(op, a0, b0);
    BddRef r1 = apply(op, a1, b1);
    r = mk(v, r0, r1);
  }
  // The entry may have been overwritten during recursion; re-address it.
  CacheEntry& slot_ref = cache_[mix(static_cast<std::uint64_t>(op), a.index, b.index) & cache_mask_];
  slot_ref = CacheEntry{a.index, b.index, r.index, op};
  return r;
}

std::size_t BddManager::size(BddRef r) const {
  std::vector<std::uint32_t> stack{r.index};
  std::unordered_map<std::uint32_t, bool> seen{{r.index, true}};
  std::size_t count = 0;
  while (!stack.empty()) {
    std::uint32_t n = stack.back();
    stack.pop_back();
    ++count;
    if (n < 2) continue;
    for (std::uint32_t c : {lo_[n], hi_[n]})
      if (seen.emplace(c, true).second) stack.push_back(c);
  }
  return count;
}

bool BddManager::eval(BddRef r, const std::vector<bool>& by_var) const {
  while (!is_terminal(r)) r = by_var[var_of(r)] ? high(r) : low(r);
  return r == kOne;
}

boost::multiprecision::cpp_int BddManager::count_minterms(BddRef r) const {
  using boost::multiprecision::cpp_int;
  std::unordered_map<std::uint32_t, cpp_int> memo;
  const std::uint32_t n = static_cast<std::uint32_t>(num_vars());
  std::function<cpp_int(BddRef)> count = [&](BddRef f) -> cpp_int {
    if (f == kZero) return 0;
    if (f == kOne) return 1;
    if (auto it = memo.find(f.index); it != memo.end()) return it->second;
    std::uint32_t l = level(f);
    cpp_int c0 = count(low(f)) << (level(low(f)) - l - 1);
    cpp_int c1 = count(high(f)) << (level(high(f)) - l - 1);
    return memo[f.index] = c0 + c1;
  };
  cpp_int total = count(r);
  return total << (is_terminal(r) ? n : level(r));
}

bool BddManager::audit() const {
  if (var_[0] != kTerminalVar || var_[1] != kTerminalVar) return false;
  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  for (std::uint32_t n = 2; n < var_.size(); ++n) {
    if (var_[n] >= num_vars()) return false;
    if (lo_[n] == hi_[n]) return false;
    if (lo_[n] >= n || hi_[n] >= n) return false;
    std::uint32_t l = level_of_[var_[n]];
    if (level(BddRef{lo_[n]}) <= l || level(BddRef{hi_[n]}) <= l) return false;
    std::uint64_t key = mix(var_[n], lo_[n], hi_[n]);
    auto [it, inserted] = seen.emplace(key, n);
    if (!inserted) {
      std::uint32_t m = it->second;
      if (var_[m] == var_[n] && lo_[m] == lo_[n] && hi_[m] == hi_[n]) return false;
    }
  }
  return true;
}

BddRef BddManager::import(const BddManager& src, BddRef r) {
  std::unordered_map<std::uint32_t, BddRef> memo;
  std::function<BddRef(BddRef)> go = [&](BddRef f) -> BddRef {
    if (f == kZero || f == kOne) return f;
    if (auto it = memo.find(f.index); it != memo.end()) return it->second;
    std::uint32_t v = src.var_of(f);
    BddRef lo = go(src.low(f));
    BddRef hi = go(src.high(f));
    BddRef out = lor(land(var(v), hi), land(nvar(v), lo));
    memo.emplace(f.index, out);
    return out;
  };
  return go(r);
}

BddRef build_bdd(BddManager& bdd, const CircuitStore& store, CircuitRef root,
                 const std::function<BddRef(std::uint32_t)>& leaf_map) {
  std::vector<CircuitRef> order = reachable(store, root);
  std::vector<BddRef> value(root.index + 1);
  for (CircuitRef r : order) {
    BddRef v;
    switch (store.kind(r)) {
      case NodeKind::False: v = BddManager::kZero; break;
      case NodeKind::True: v = BddManager::kOne; break;
      case NodeKind::Leaf: v = leaf_map(store.leaf(r)); break;
      case NodeKind::And:
        v = BddManager::kOne;
        for (CircuitRef c : store.children(r)) v = bdd.land(v, value[c.index]);
        break;
      case NodeKind::Or:
        v = BddManager::kZero;
        for (CircuitRef c : store.children(r)) v = bdd.lor(v, value[c.index]);
        break;
    }
    value[r.index] = v;
  }
  return value[root.index];
}

bool bdd_equiv(BddManager& a, BddRef fa, const BddManager& b, BddRef fb) {
  return a.import(b, fb) == fa;
}

std::vector<std::uint32_t> sift_order(const BddManager& bdd, BddRef f) {
  std::vector<std::uint32_t> order(bdd.order().begin(), bdd.order().end());
  auto cost = [&](const std::vector<std::uint32_t>& candidate) {
    BddManager m(candidate, kDefaultNodeCap, 12);
    return m.size(m.import(bdd, f));
  };
  std::size_t best = cost(order);
  for (std::uint32_t v = 0; v < order.size(); ++v) {
    auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin());
    std::vector<std::uint32_t> base = order;
    base.erase(base.begin() + static_cast<std::ptrdiff_t>(pos));
    for (std::size_t at = 0; at <= base.size(); ++at) {
      if (at == pos) continue;
      std::vector<std::uint32_t> candidate = base;
      candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(at), v);
      std::size_t c = cost(candidate);
      if (c < best) {
        best = c;
        order = candidate;
      }
    }
  }
  return order;
}

}  // namespace sdpabs
