#pragma once

#include <cstddef>
#include <vector>

#include "sdpabs/syntax.hpp"

namespace sdpabs {

/// Disjunction (in a CNF) or conjunction (in a DNF) of literals, sorted and
/// duplicate-free.
using Clause = std::vector<Literal>;

inline constexpr std::size_t kDefaultCnfCap = 4096;

/// Negation normal form: Not only directly above atoms.
Formula nnf(const Formula& f);

/// Equivalent CNF by De Morgan push-down and distribution; no auxiliary
/// variables. Tautological and subsumed clauses are removed. `true` gives no
/// clauses; `false` gives one empty clause. Throws CnfBlowup past `cap`.
std::vector<Clause> to_cnf(const Formula& f, std::size_t cap = kDefaultCnfCap);

/// Dual of to_cnf: an equivalent set of cubes; contradictory cubes dropped.
std::vector<Clause> to_dnf(const Formula& f, std::size_t cap = kDefaultCnfCap);

}  // namespace sdpabs
