#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdpabs/circuit.hpp"

namespace sdpabs {

struct BddRef {
  std::uint32_t index = 0;
  friend auto operator<=>(BddRef, BddRef) = default;
};

inline constexpr std::size_t kDefaultNodeCap = 10'000'000;

/// Reduced ordered BDD manager without complement edges. Node 0 is the
/// false terminal and node 1 the true terminal. Variables are numbered
/// independently of their level in the order.
class BddManager {
 public:
  static constexpr BddRef kZero{0};
  static constexpr BddRef kOne{1};

  explicit BddManager(std::size_t num_vars, std::size_t node_cap = kDefaultNodeCap, unsigned cache_bits = 20);
  /// `order[level]` is the variable tested at that level.
  BddManager(std::vector<std::uint32_t> order, std::size_t node_cap = kDefaultNodeCap, unsigned cache_bits = 20);

  std::size_t num_vars() const { return level_of_.size(); }
  std::span<const std::uint32_t> order() const { return var_at_; }

  BddRef var(std::uint32_t v);
  BddRef nvar(std::uint32_t v);
  BddRef land(BddRef a, BddRef b);
  BddRef lor(BddRef a, BddRef b);
  BddRef lnot(BddRef a);

  bool is_terminal(BddRef r) const { return r.index < 2; }
  std::uint32_t var_of(BddRef r) const { return var_[r.index]; }
  std::uint32_t level(BddRef r) const;
  BddRef low(BddRef r) const { return BddRef{lo_[r.index]}; }
  BddRef high(BddRef r) const { return BddRef{hi_[r.index]}; }

  /// Nodes allocated so far, terminals included.
  std::size_t node_count() const { return var_.size(); }
  /// Nodes reachable from `r`, terminals included.
  std::size_t size(BddRef r) const;

  bool eval(BddRef r, const std::vector<bool>& by_var) const;
  boost::multiprecision::cpp_int count_minterms(BddRef r) const;

  /// Checks reducedness, ordering and uniqueness of every node.
  bool audit() const;

  /// Rebuilds `r` from `src` under this manager's order.
  BddRef import(const BddManager& src, BddRef r);

 private:
  BddRef mk(std::uint32_t v, BddRef lo, BddRef hi);
  BddRef apply(int op, BddRef a, BddRef b);
  std::size_t slot(std::uint32_t v, std::uint32_t lo, std::uint32_t hi) const;
  void grow();

  struct CacheEntry {
    std::uint32_t a = 0, b = 0, result = 0;
    std::int32_t op = -1;
  };

  std::size_t node_cap_;
  std::vector<std::uint32_t> level_of_;
  std::vector<std::uint32_t> var_at_;
  std::vector<std::uint32_t> var_, lo_, hi_;
  std::vector<std::uint32_t> unique_;  // open addressing, 0 = empty
  std::size_t used_ = 0;
  std::vector<CacheEntry> cache_;
  std::size_t cache_mask_;
};

/// Same Boolean function as `root`, with `leaf_map` giving the BDD of each leaf.
BddRef build_bdd(BddManager& bdd, const CircuitStore& store, CircuitRef root,
                 const std::function<BddRef(std::uint32_t)>& leaf_map);

bool bdd_equiv(BddManager& a, BddRef fa, const BddManager& b, BddRef fb);

/// Greedy sifting: moves each variable to the level minimising the size of
/// `f`, one variable at a time. Returns the resulting order.
std::vector<std::uint32_t> sift_order(const BddManager& bdd, BddRef f);

}  // namespace sdpabs
