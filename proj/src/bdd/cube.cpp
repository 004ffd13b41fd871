#include "sdpabs/cube.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "sdpabs/error.hpp"

namespace sdpabs {

namespace {

using CubeList = std::vector<Cube>;

class PrimeEnumerator {
 public:
  PrimeEnumerator(BddManager& bdd, std::size_t cap) : bdd_(bdd), cap_(cap) {}

  // PI(f) = PI(f0 & f1) + !x.(PI(f0) - PI(f0 & f1)) + x.(PI(f1) - PI(f0 & f1))
  std::shared_ptr<const CubeList> primes(BddRef f) {
    if (f == BddManager::kZero) return empty_;
    if (f == BddManager::kOne) return tautology_;
    if (auto it = memo_.find(f.index); it != memo_.end()) return it->second;

    const std::uint32_t x = bdd_.var_of(f);
    BddRef f0 = bdd_.low(f), f1 = bdd_.high(f);
    auto shared = primes(bdd_.land(f0, f1));
    auto p0 = primes(f0);
    auto p1 = primes(f1);

    auto out = std::make_shared<CubeList>(*shared);
    auto extend = [&](const CubeList& from, bool positive) {
      CubeList only;
      std::set_difference(from.begin(), from.end(), shared->begin(), shared->end(), std::back_inserter(only));
      for (Cube& c : only) {
        c.insert(std::upper_bound(c.begin(), c.end(), CubeLiteral{x, positive}), CubeLiteral{x, positive});
        out->push_back(std::move(c));
        if (out->size() > cap_) throw CubeLimit("more than " + std::to_string(cap_) + " prime implicants");
      }
    };
    extend(*p0, false);
    extend(*p1, true);
    std::sort(out->begin(), out->end());
    memo_.emplace(f.index, out);
    return out;
  }

 private:
  BddManager& bdd_;
  std::size_t cap_;
  std::shared_ptr<const CubeList> empty_ = std::make_shared<CubeList>();
  std::shared_ptr<const CubeList> tautology_ = std::make_shared<CubeList>(CubeList{Cube{}});
  std::unordered_map<std::uint32_t, std::shared_ptr<const CubeList>> memo_;
};

}  // namespace

std::vector<Cube> prime_implicants(BddManager& bdd, BddRef f, std::size_t cap) {
  PrimeEnumerator e(bdd, cap);
  std::vector<Cube> out = *e.primes(f);
  if (out.size() > cap) throw CubeLimit("more than " + std::to_string(cap) + " prime implicants");
  return out;
}

BddRef cube_bdd(BddManager& bdd, const Cube& c) {
  BddRef r = BddManager::kOne;
  for (const CubeLiteral& l : c) r = bdd.land(r, l.positive ? bdd.var(l.var) : bdd.nvar(l.var));
  return r;
}

BddRef cubes_bdd(BddManager& bdd, const std::vector<Cube>& cubes) {
  BddRef r = BddManager::kZero;
  for (const Cube& c : cubes) r = bdd.lor(r, cube_bdd(bdd, c));
  return r;
}

std::string cube_str(const Cube& c, const std::function<std::string(std::uint32_t)>& name) {
  if (c.empty()) return "true";
  std::string out;
  for (const CubeLiteral& l : c) {
    if (!out.empty()) out += ' ';
    if (!l.positive) out += '!';
    out += name(l.var);
  }
  return out;
}

}  // namespace sdpabs
