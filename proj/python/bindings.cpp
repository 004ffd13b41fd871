#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdpabs/error.hpp"
#include "sdpabs/parser.hpp"
#include "sdpabs/predabs.hpp"

namespace py = pybind11;
using namespace sdpabs;

namespace {

Problem load(const std::string& text, const std::optional<std::string>& goal) {
  ParseOptions po;
  po.require_goal = !goal;
  Problem p = parse_problem(text, po);
  if (goal) parse_goal_into(*goal, p);
  return p;
}

py::list cube_list(const Problem& p, const std::vector<Cube>& cubes) {
  py::list out;
  for (const Cube& c : cubes) {
    py::list lits;
    for (const CubeLiteral& l : c) {
      std::string atom = p.atoms[p.predicates[l.var]].str();
      lits.append(l.positive ? atom : "!" + atom);
    }
    out.append(lits);
  }
  return out;
}

py::dict abstract(const std::string& problem, const std::optional<std::string>& goal, bool keep_infeasible,
                  bool underapprox_disjunction, bool sift, std::size_t jobs, std::size_t node_cap,
                  std::size_t cube_cap) {
  Problem p = load(problem, goal);
  AbstractOptions opts;
  opts.keep_infeasible = keep_infeasible;
  opts.underapprox_disjunction = underapprox_disjunction;
  opts.sift = sift;
  opts.jobs = jobs;
  opts.node_cap = node_cap;
  opts.cube_cap = cube_cap;
  AbstractionResult r;
  {
    py::gil_scoped_release release;
    r = abstract_formula(p, opts);
  }
  py::dict out;
  out["cubes"] = cube_list(p, r.cubes);
  out["exact"] = r.exact;
  out["reasons"] = r.reasons;
  out["primes"] = r.all_primes.size();
  out["circuit_nodes"] = r.stats.circuit_nodes;
  out["bdd_nodes"] = r.stats.bdd_nodes;
  return out;
}

}  // namespace

PYBIND11_MODULE(_sdpabs, m) {
  m.doc() = "Predicate abstraction with symbolic decision procedures";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnsupportedAtom>(m, "UnsupportedAtom", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  m.def("abstract", &abstract, py::arg("problem"), py::arg("goal") = py::none(), py::kw_only(),
        py::arg("keep_infeasible") = false, py::arg("underapprox_disjunction") = false, py::arg("sift") = false,
        py::arg("jobs") = 1, py::arg("node_cap") = kDefaultNodeCap, py::arg("cube_cap") = kDefaultCubeCap,
        "Abstraction of the goal over the predicates: a dict with 'cubes' (lists of literal strings, "
        "negatives prefixed by '!'), 'exact', 'reasons', 'primes' and size statistics.");

  m.def(
      "check",
      [](const std::string& problem) {
        ParseOptions po;
        po.require_goal = false;
        Problem p = parse_problem(problem, po);
        py::gil_scoped_release release;
        return check_problem(p) == Verdict::Sat;
      },
      py::arg("problem"), "True when the predicates and the goal are jointly satisfiable.");

  m.def(
      "brute_force",
      [](const std::string& problem, std::size_t cap) {
        Problem p = load(problem, std::nullopt);
        std::vector<Cube> minterms;
        {
          py::gil_scoped_release release;
          minterms = brute_force_Fp(p, p.goal, cap);
        }
        return cube_list(p, minterms);
      },
      py::arg("problem"), py::arg("cap") = 16, "Minterms over the predicates that imply the goal.");

  m.def("diamond", &diamond_text, py::arg("n"), "Problem text for a chain of n diamonds.");
}
