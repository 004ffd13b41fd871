#include "sdpabs/term.hpp"

namespace sdpabs {

namespace {

std::string make_key(std::string_view symbol, std::span<const TermId> args) {
  std::string key(symbol);
  key.push_back('\0');
  for (TermId a : args) {
    key.append(std::to_string(a.index));
    key.push_back(',');
  }
  return key;
}

}  // namespace

TermId TermTable::intern(std::string_view symbol, std::span<const TermId> args) {
  std::string key = make_key(symbol, args);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  TermId id{static_cast<std::uint32_t>(terms_.size())};
  terms_.push_back(Term{std::string(symbol), std::vector<TermId>(args.begin(), args.end())});
  index_.emplace(std::move(key), id);
  return id;
}

TermId TermTable::var(std::string_view name) { return intern(name, {}); }

TermId TermTable::app(std::string_view fn, std::span<const TermId> args) { return intern(fn, args); }

std::optional<TermId> TermTable::find_var(std::string_view name) const {
  auto it = index_.find(make_key(name, {}));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool TermTable::is_zero(TermId t) const {
  const Term& term = at(t);
  return term.is_var() && term.symbol == kZeroName;
}

std::string TermTable::str(TermId t) const {
  const Term& term = at(t);
  if (term.is_var()) return term.symbol;
  std::string out = "(" + term.symbol;
  for (TermId a : term.args) {
    out.push_back(' ');
    out += str(a);
  }
  out.push_back(')');
  return out;
}

void TermTable::collect_subterms(TermId t, std::vector<char>& seen, std::vector<TermId>& out) const {
  if (seen.size() < terms_.size()) seen.resize(terms_.size(), 0);
  if (seen[t.index]) return;
  for (TermId a : at(t).args) collect_subterms(a, seen, out);
  seen[t.index] = 1;
  out.push_back(t);
}

}  // namespace sdpabs
