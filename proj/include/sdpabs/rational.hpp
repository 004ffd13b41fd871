#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer comparisons recurse forever under
// C++20's rewritten operator candidates; exact overloads win over them.
namespace boost {
#define SDPABS_RATIONAL_CMP(T)                                                                          \
  inline bool operator==(const rational<std::int64_t>& a, T b) { return a == rational<std::int64_t>(b); } \
  inline bool operator<(const rational<std::int64_t>& a, T b) { return a < rational<std::int64_t>(b); }   \
  inline bool operator>(const rational<std::int64_t>& a, T b) { return a > rational<std::int64_t>(b); }   \
  inline bool operator<=(const rational<std::int64_t>& a, T b) { return !(a > rational<std::int64_t>(b)); } \
  inline bool operator>=(const rational<std::int64_t>& a, T b) { return !(a < rational<std::int64_t>(b)); } \
  inline bool operator<(T a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) < b; }   \
  inline bool operator>(T a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) > b; }   \
  inline bool operator<=(T a, const rational<std::int64_t>& b) { return !(rational<std::int64_t>(a) > b); } \
  inline bool operator>=(T a, const rational<std::int64_t>& b) { return !(rational<std::int64_t>(a) < b); }
SDPABS_RATIONAL_CMP(int)
SDPABS_RATIONAL_CMP(long)
SDPABS_RATIONAL_CMP(long long)
#undef SDPABS_RATIONAL_CMP
}  // namespace boost

namespace sdpabs {

/// Exact constants for difference-logic offsets.
using Rational = boost::rational<std::int64_t>;

/// Parses `12`, `-3`, `1/2`, or `0.25`. Returns false on malformed input.
bool parse_rational(std::string_view text, Rational& out);

std::string to_string(const Rational& r);

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.numerator()) * 31u ^
           std::hash<std::int64_t>{}(r.denominator());
  }
};

}  // namespace sdpabs
