#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sdpabs/bdd.hpp"

namespace sdpabs {

struct CubeLiteral {
  std::uint32_t var = 0;
  bool positive = true;
  friend auto operator<=>(const CubeLiteral&, const CubeLiteral&) = default;
};

/// Conjunction of literals sorted by variable, each variable at most once.
using Cube = std::vector<CubeLiteral>;

inline constexpr std::size_t kDefaultCubeCap = std::size_t{1} << 20;

/// Prime implicants of `f`, each cube sorted by variable and the list sorted.
/// Throws CubeLimit when more than `cap` cubes arise at any node.
std::vector<Cube> prime_implicants(BddManager& bdd, BddRef f, std::size_t cap = kDefaultCubeCap);

BddRef cube_bdd(BddManager& bdd, const Cube& c);
BddRef cubes_bdd(BddManager& bdd, const std::vector<Cube>& cubes);

/// `true` for the empty cube; literals space-separated, negatives with `!`.
std::string cube_str(const Cube& c, const std::function<std::string(std::uint32_t)>& name);

}  // namespace sdpabs
