#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <functional>
#include <vector>

namespace sdpabs {

struct CircuitRef {
  std::uint32_t index = 0;
  friend auto operator<=>(CircuitRef, CircuitRef) = default;
};

enum class NodeKind : std::uint8_t { False, True, Leaf, And, Or };

/// Hash-consed monotone AND/OR DAG over numbered leaves. Node 0 is the
/// absent marker (constant false), node 1 is true. Children always have
/// smaller indices than their parents.
class CircuitStore {
 public:
  static constexpr CircuitRef kFalse{0};
  static constexpr CircuitRef kTrue{1};

  CircuitStore();

  CircuitRef mk_true() const { return kTrue; }
  CircuitRef mk_false() const { return kFalse; }
  CircuitRef mk_leaf(std::uint32_t leaf);
  /// Drops true children, collapses on a false child, deduplicates and sorts.
  CircuitRef mk_and(std::vector<CircuitRef> children);
  /// Drops false children, collapses on a true child, deduplicates and sorts.
  CircuitRef mk_or(std::vector<CircuitRef> children);
  CircuitRef mk_and(CircuitRef a, CircuitRef b) { return mk_and(std::vector<CircuitRef>{a, b}); }
  CircuitRef mk_or(CircuitRef a, CircuitRef b) { return mk_or(std::vector<CircuitRef>{a, b}); }

  NodeKind kind(CircuitRef r) const { return kinds_[r.index]; }
  std::uint32_t leaf(CircuitRef r) const { return first_[r.index]; }
  std::span<const CircuitRef> children(CircuitRef r) const;
  std::size_t size() const { return kinds_.size(); }

 private:
  CircuitRef intern(NodeKind kind, std::span<const CircuitRef> children, std::uint32_t leaf);
  std::size_t hash(NodeKind kind, std::span<const CircuitRef> children, std::uint32_t leaf) const;
  bool same(std::uint32_t node, NodeKind kind, std::span<const CircuitRef> children,
            std::uint32_t leaf) const;
  void grow();

  std::vector<NodeKind> kinds_;
  std::vector<std::uint32_t> first_;  // leaf id, or offset into children_
  std::vector<std::uint32_t> count_;
  std::vector<CircuitRef> children_;
  std::vector<std::uint32_t> table_;  // open addressing; 0 = empty slot
  std::size_t used_ = 0;
};

/// Nodes reachable from `root`, children before parents.
std::vector<CircuitRef> reachable(const CircuitStore& store, CircuitRef root);

/// Evaluates the DAG below a fixed root for many leaf assignments.
class CircuitEvaluator {
 public:
  CircuitEvaluator(const CircuitStore& store, CircuitRef root);

  /// `leaf_value(id)` for each leaf; throws UnknownLeaf if it returns -1.
  bool eval(const std::function<int(std::uint32_t)>& leaf_value) const;
  /// Bit-parallel: bit k of the result is the value under assignment k.
  std::uint64_t eval_many(const std::function<std::uint64_t(std::uint32_t)>& leaf_bits) const;
  std::span<const std::uint32_t> leaves() const { return leaves_; }

 private:
  const CircuitStore& store_;
  CircuitRef root_;
  std::vector<CircuitRef> order_;
  std::vector<std::uint32_t> slot_;  // store index -> position in order_
  std::vector<std::uint32_t> leaves_;
};

/// Evaluation with leaf `id` true iff `leaf_set[id]`.
bool eval_expr(const CircuitStore& store, CircuitRef root, const std::vector<bool>& leaf_set);

struct CircuitStats {
  std::size_t node_count = 0;
  std::size_t depth = 0;
  std::size_t leaf_count = 0;
};

CircuitStats circuit_stats(const CircuitStore& store, CircuitRef root);

void write_dot(std::ostream& out, const CircuitStore& store, CircuitRef root,
               const std::function<std::string(std::uint32_t)>& leaf_label);

}  // namespace sdpabs
