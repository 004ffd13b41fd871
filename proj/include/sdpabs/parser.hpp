#pragma once

#include <string_view>

#include "sdpabs/syntax.hpp"

namespace sdpabs {

struct ParseOptions {
  /// When false, a problem may consist of the predicates block alone; the
  /// goal then defaults to `true`.
  bool require_goal = true;
};

/// Parses
///
///   (predicates atom*)
///   (goal formula)
///
/// Comments run from `;` to end of line. Throws ParseError with a 1-based
/// line and column.
Problem parse_problem(std::string_view text, ParseOptions options = {});

/// Parses a standalone `(goal formula)` block against an existing problem's
/// atom table and installs it as the problem's goal.
void parse_goal_into(std::string_view text, Problem& problem);

}  // namespace sdpabs
