#pragma once

#include <compare>
#include <deque>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sdpabs/rational.hpp"
#include "sdpabs/term.hpp"

namespace sdpabs {

/// Eq/Ne are EUF (dis)equalities over terms, stored with lhs <= rhs.
/// Le/Lt are difference-logic edges `lhs <= rhs + offset` / `lhs < rhs + offset`
/// over variables.
enum class PredKind : std::uint8_t { Eq, Ne, Le, Lt };

struct Predicate {
  PredKind kind = PredKind::Eq;
  TermId lhs;
  TermId rhs;
  Rational offset = 0;

  static Predicate eq(TermId a, TermId b);
  static Predicate ne(TermId a, TermId b);
  static Predicate le(TermId x, TermId y, Rational c) { return {PredKind::Le, x, y, c}; }
  static Predicate lt(TermId x, TermId y, Rational c) { return {PredKind::Lt, x, y, c}; }

  bool is_euf() const { return kind == PredKind::Eq || kind == PredKind::Ne; }
  bool is_dif() const { return !is_euf(); }
  bool strict() const { return kind == PredKind::Lt; }

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

/// Flips an EUF polarity; turns `x <= y + c` into `y < x - c` and
/// `x < y + c` into `y <= x - c`. An involution on every predicate.
Predicate negate(const Predicate& p);

std::string to_string(const Predicate& p, const TermTable& terms);

struct PredicateHash {
  std::size_t operator()(const Predicate& p) const noexcept;
};

struct PredId {
  std::uint32_t index = 0;
  friend auto operator<=>(PredId, PredId) = default;
};

struct PredIdHash {
  std::size_t operator()(PredId p) const noexcept { return std::hash<std::uint32_t>{}(p.index); }
};

/// Interns canonical predicates to dense ids, one table per engine.
class PredicateTable {
 public:
  PredId intern(const Predicate& p);
  std::optional<PredId> find(const Predicate& p) const;
  const Predicate& at(PredId id) const { return preds_[id.index]; }
  std::size_t size() const { return preds_.size(); }

 private:
  std::deque<Predicate> preds_;  // references stay valid while interning
  std::unordered_map<Predicate, PredId, PredicateHash> index_;
};

/// Union of all subterms of the predicates in `g` (for difference-logic
/// edges: both endpoint variables). Sorted by id.
std::vector<TermId> terms_of(std::span<const PredId> g, const PredicateTable& preds,
                             const TermTable& terms);

}  // namespace sdpabs
