#include "sdpabs/rational.hpp"

#include <charconv>
#include <limits>

namespace sdpabs {

namespace {

bool parse_int(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  if (text.empty()) return false;
  std::string_view body = text;
  if (body.front() == '+') return false;

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::int64_t num = 0, den = 0;
    if (!parse_int(body.substr(0, slash), num)) return false;
    std::string_view den_text = body.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') return false;
    if (!parse_int(den_text, den) || den == 0) return false;
    out = Rational(num, den);
    return true;
  }

  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    bool negative = body.front() == '-';
    std::string_view int_part = body.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    std::string_view frac_part = body.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 17) return false;
    for (char c : frac_part)
      if (c < '0' || c > '9') return false;
    std::int64_t whole = 0, frac = 0, scale = 1;
    if (!int_part.empty() && !parse_int(int_part, whole)) return false;
    if (int_part.empty() && !negative && dot != 0) return false;
    if (!parse_int(frac_part, frac)) return false;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational value = Rational(whole) + Rational(frac, scale);
    out = negative ? -value : value;
    return true;
  }

  std::int64_t value = 0;
  if (!parse_int(body, value)) return false;
  out = Rational(value);
  return true;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace sdpabs
