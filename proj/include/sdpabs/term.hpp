#pragma once

#include <compare>
#include <deque>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sdpabs {

/// Dense handle into a TermTable. Arguments always get smaller ids than the
/// applications that use them.
struct TermId {
  std::uint32_t index = 0;
  friend auto operator<=>(TermId, TermId) = default;
};

struct TermIdHash {
  std::size_t operator()(TermId t) const noexcept { return std::hash<std::uint32_t>{}(t.index); }
};

/// A variable (no arguments) or an uninterpreted function application.
struct Term {
  std::string symbol;
  std::vector<TermId> args;

  bool is_var() const { return args.empty(); }
};

/// Hash-consing store for terms. Structurally equal terms share one id.
class TermTable {
 public:
  /// Name of the distinguished zero variable used for `x < 5` style atoms.
  static constexpr std::string_view kZeroName = "x0";

  TermId var(std::string_view name);
  TermId app(std::string_view fn, std::span<const TermId> args);
  TermId zero() { return var(kZeroName); }

  std::optional<TermId> find_var(std::string_view name) const;
  bool is_zero(TermId t) const;

  const Term& at(TermId t) const { return terms_[t.index]; }
  std::size_t size() const { return terms_.size(); }

  /// Prints in the input syntax, e.g. `(f (g x) y)`.
  std::string str(TermId t) const;

  /// Appends `t` and all its subterms (post-order, no duplicates w.r.t. `seen`).
  void collect_subterms(TermId t, std::vector<char>& seen, std::vector<TermId>& out) const;

 private:
  TermId intern(std::string_view symbol, std::span<const TermId> args);

  std::deque<Term> terms_;
  std::unordered_map<std::string, TermId> index_;
};

}  // namespace sdpabs
