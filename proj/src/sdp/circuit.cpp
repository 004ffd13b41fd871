#include "sdpabs/circuit.hpp"

#include <algorithm>
#include <ostream>

#include "sdpabs/error.hpp"

namespace sdpabs {

CircuitStore::CircuitStore() {
  kinds_ = {NodeKind::False, NodeKind::True};
  first_ = {0, 0};
  count_ = {0, 0};
  table_.assign(1024, 0);
}

std::span<const CircuitRef> CircuitStore::children(CircuitRef r) const {
  NodeKind k = kinds_[r.index];
  if (k != NodeKind::And && k != NodeKind::Or) return {};
  return {children_.data() + first_[r.index], count_[r.index]};
}

std::size_t CircuitStore::hash(NodeKind kind, std::span<const CircuitRef> children,
                               std::uint32_t leaf) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(kind) + 1) ^ leaf;
  for (CircuitRef c : children) {
    h ^= c.index + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 32;
  return static_cast<std::size_t>(h);
}

bool CircuitStore::same(std::uint32_t node, NodeKind kind, std::span<const CircuitRef> children,
                        std::uint32_t leaf) const {
  if (kinds_[node] != kind) return false;
  if (kind == NodeKind::Leaf) return first_[node] == leaf;
  auto mine = this->children(CircuitRef{node});
  return std::equal(mine.begin(), mine.end(), children.begin(), children.end());
}

void CircuitStore::grow() {
  std::vector<std::uint32_t> old;
  old.swap(table_);
  table_.assign(old.size() * 2, 0);
  const std::size_t mask = table_.size() - 1;
  for (std::uint32_t node : old) {
    if (node == 0) continue;
    CircuitRef r{node};
    std::size_t h = hash(kinds_[node], children(r), kinds_[node] == NodeKind::Leaf ? first_[node] : 0) & mask;
    while (table_[h] != 0) h = (h + 1) & mask;
    table_[h] = node;
  }
}

CircuitRef CircuitStore::intern(NodeKind kind, std::span<const CircuitRef> children, std::uint32_t leaf) {
  const std::size_t mask = table_.size() - 1;
  std::size_t h = hash(kind, children, leaf) & mask;
  while (table_[h] != 0) {
    if (same(table_[h], kind, children, leaf)) return CircuitRef{table_[h]};
    h = (h + 1) & mask;
  }
  auto node = static_cast<std::uint32_t>(kinds_.size());
  kinds_.push_back(kind);
  if (kind == NodeKind::Leaf) {
    first_.push_back(leaf);
    count_.push_back(0);
  } else {
    first_.push_back(static_cast<std::uint32_t>(children_.size()));
    count_.push_back(static_cast<std::uint32_t>(children.size()));
    children_.insert(children_.end(), children.begin(), children.end());
  }
  table_[h] = node;
  if (++used_ * 2 > table_.size()) grow();
  return CircuitRef{node};
}

CircuitRef CircuitStore::mk_leaf(std::uint32_t leaf) { return intern(NodeKind::Leaf, {}, leaf); }

CircuitRef CircuitStore::mk_and(std::vector<CircuitRef> children) {
  std::erase(children, kTrue);
  if (std::find(children.begin(), children.end(), kFalse) != children.end()) return kFalse;
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  if (children.empty()) return kTrue;
  if (children.size() == 1) return children.front();
  return intern(NodeKind::And, children, 0);
}

CircuitRef CircuitStore::mk_or(std::vector<CircuitRef> children) {
  std::erase(children, kFalse);
  if (std::find(children.begin(), children.end(), kTrue) != children.end()) return kTrue;
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  if (children.empty()) return kFalse;
  if (children.size() == 1) return children.front();
  return intern(NodeKind::Or, children, 0);
}

std::vector<CircuitRef> reachable(const CircuitStore& store, CircuitRef root) {
  std::vector<char> seen(root.index + 1, 0);
  std::vector<CircuitRef> stack{root};
  seen[root.index] = 1;
  std::vector<CircuitRef> out;
  while (!stack.empty()) {
    CircuitRef r = stack.back();
    stack.pop_back();
    out.push_back(r);
    for (CircuitRef c : store.children(r)) {
      if (!seen[c.index]) {
        seen[c.index] = 1;
        stack.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CircuitEvaluator::CircuitEvaluator(const CircuitStore& store, CircuitRef root)
    : store_(store), root_(root), order_(reachable(store, root)), slot_(root.index + 1, 0) {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    slot_[order_[i].index] = static_cast<std::uint32_t>(i);
    if (store.kind(order_[i]) == NodeKind::Leaf) leaves_.push_back(store.leaf(order_[i]));
  }
  std::sort(leaves_.begin(), leaves_.end());
}

bool CircuitEvaluator::eval(const std::function<int(std::uint32_t)>& leaf_value) const {
  return eval_many([&](std::uint32_t leaf) -> std::uint64_t {
           int v = leaf_value(leaf);
           if (v < 0) throw UnknownLeaf("circuit leaf " + std::to_string(leaf) + " has no value");
           return v ? 1u : 0u;
         }) & 1u;
}

std::uint64_t CircuitEvaluator::eval_many(const std::function<std::uint64_t(std::uint32_t)>& leaf_bits) const {
  std::vector<std::uint64_t> value(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    CircuitRef r = order_[i];
    switch (store_.kind(r)) {
      case NodeKind::False: value[i] = 0; break;
      case NodeKind::True: value[i] = ~0ull; break;
      case NodeKind::Leaf: value[i] = leaf_bits(store_.leaf(r)); break;
      case NodeKind::And: {
        std::uint64_t v = ~0ull;
        for (CircuitRef c : store_.children(r)) v &= value[slot_[c.index]];
        value[i] = v;
        break;
      }
      case NodeKind::Or: {
        std::uint64_t v = 0;
        for (CircuitRef c : store_.children(r)) v |= value[slot_[c.index]];
        value[i] = v;
        break;
      }
    }
  }
  return value.back();
}

bool eval_expr(const CircuitStore& store, CircuitRef root, const std::vector<bool>& leaf_set) {
  CircuitEvaluator ev(store, root);
  return ev.eval([&](std::uint32_t leaf) { return leaf < leaf_set.size() ? int(leaf_set[leaf]) : -1; });
}

CircuitStats circuit_stats(const CircuitStore& store, CircuitRef root) {
  std::vector<CircuitRef> nodes = reachable(store, root);
  std::vector<std::size_t> depth(root.index + 1, 0);
  CircuitStats stats;
  stats.node_count = nodes.size();
  for (CircuitRef r : nodes) {
    if (store.kind(r) == NodeKind::Leaf) ++stats.leaf_count;
    std::size_t d = 0;
    for (CircuitRef c : store.children(r)) d = std::max(d, depth[c.index] + 1);
    depth[r.index] = d;
  }
  stats.depth = depth[root.index];
  return stats;
}

void write_dot(std::ostream& out, const CircuitStore& store, CircuitRef root,
               const std::function<std::string(std::uint32_t)>& leaf_label) {
  out << "digraph circuit {\n  rankdir=BT;\n";
  for (CircuitRef r : reachable(store, root)) {
    out << "  n" << r.index << " [";
    switch (store.kind(r)) {
      case NodeKind::False: out << "label=\"false\", shape=box"; break;
      case NodeKind::True: out << "label=\"true\", shape=box"; break;
      case NodeKind::Leaf: {
        std::string label = leaf_label(store.leaf(r));
        std::string escaped;
        for (char ch : label) {
          if (ch == '"' || ch == '\\') escaped += '\\';
          escaped += ch;
        }
        out << "label=\"" << escaped << "\", shape=box";
        break;
      }
      case NodeKind::And: out << "label=\"\", shape=diamond"; break;
      case NodeKind::Or: out << "label=\"or\", shape=circle"; break;
    }
    out << "];\n";
    for (CircuitRef c : store.children(r)) out << "  n" << c.index << " -> n" << r.index << ";\n";
  }
  out << "}\n";
}

}  // namespace sdpabs
