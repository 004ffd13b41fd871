#include <string>

#include "sdpabs/parser.hpp"
#include "sdpabs/predabs.hpp"

namespace sdpabs {

std::string diamond_text(std::size_t n) {
  auto v = [](char c, std::size_t i) { return std::string(1, c) + std::to_string(i); };
  std::string out = "(predicates\n";
  for (std::size_t i = 1; i <= n; ++i) {
    out += "  (= " + v('a', i) + " " + v('b', i) + ") (= " + v('b', i) + " " + v('d', i) + ")";
    out += " (= " + v('a', i) + " " + v('c', i) + ") (= " + v('c', i) + " " + v('d', i) + ")\n";
    if (i < n) out += "  (= " + v('d', i) + " " + v('a', i + 1) + ")\n";
  }
  out += ")\n(goal (= " + v('a', 1) + " " + v('d', n) + "))\n";
  return out;
}

Problem gen_diamond(std::size_t n) { return parse_problem(diamond_text(n)); }

}  // namespace sdpabs
