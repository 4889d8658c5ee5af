#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "kat/cli.hpp"
#include "kat/equiv.hpp"
#include "kat/hyp.hpp"
#include "kat/parse.hpp"
#include "kat/print.hpp"
#include "kat/semantics.hpp"
#include "kat/syntax.hpp"
#include "kat/whilelang.hpp"

namespace py = pybind11;

namespace {

struct PyExpr {
  kat::ExprPtr ptr;
};

struct PyProg {
  kat::ProgPtr ptr;
};

struct CheckOut {
  bool equal = false;
  std::optional<std::string> witness;
  std::optional<std::string> side;
};

struct HkatOut {
  bool proved = false;
  std::optional<std::string> witness;
  std::optional<std::string> side;
  std::vector<std::string> unsupported;
  std::string transformed;
};

CheckOut to_check_out(const kat::Signature& sig, const kat::Verdict& v) {
  CheckOut out;
  out.equal = v.is_equal();
  if (!v.is_equal()) {
    out.witness = kat::print_guarded_string(sig, v.witness());
    out.side = v.side() == kat::Side::LeftOnly ? "left" : "right";
  }
  return out;
}

HkatOut to_hkat_out(const kat::Signature& sig, const kat::HkatResult& r) {
  HkatOut out;
  out.proved = r.verdict.is_equal();
  if (!r.verdict.is_equal()) {
    out.witness = kat::print_guarded_string(sig, r.verdict.witness());
    out.side = r.verdict.side() == kat::Side::LeftOnly ? "left" : "right";
  }
  for (const auto& u : r.unsupported)
    out.unsupported.push_back(kat::print_equation(sig, u));
  out.transformed = kat::print_equation(sig, r.transformed);
  return out;
}

std::vector<kat::Equation> parse_equations(const kat::Signature& sig,
                                           const std::vector<std::string>& ts) {
  std::vector<kat::Equation> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(kat::parse_equation(sig, t));
  return out;
}

kat::HoareTriple parse_triple(const kat::Signature& sig,
                              const std::tuple<std::string, std::string,
                                               std::string>& t) {
  return kat::HoareTriple{kat::parse_bool(sig, std::get<0>(t)),
                          kat::parse_prog(sig, std::get<1>(t)),
                          kat::parse_bool(sig, std::get<2>(t))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Decision procedures for Kleene algebra with tests: equivalence and "
      "inclusion checking with counterexamples, hypothesis elimination, "
      "while-program equivalence, and Hoare-triple checking.";

  py::register_exception<kat::parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<kat::state_limit_error>(m, "StateLimitError",
                                                 PyExc_RuntimeError);

  py::class_<kat::Signature>(m, "Signature")
      .def(py::init<std::vector<std::string>, std::vector<std::string>,
                    std::size_t>(),
           py::arg("tests"), py::arg("actions"),
           py::arg("atom_limit") = kat::kDefaultAtomLimit)
      .def_property_readonly("tests", &kat::Signature::tests)
      .def_property_readonly("actions", &kat::Signature::letters)
      .def_property_readonly("atom_count", &kat::Signature::atom_count);

  py::class_<PyExpr>(m, "Expr");
  py::class_<PyProg>(m, "Prog");

  py::class_<CheckOut>(m, "CheckResult")
      .def_readonly("equal", &CheckOut::equal)
      .def_readonly("witness", &CheckOut::witness)
      .def_readonly("side", &CheckOut::side)
      .def("__repr__", [](const CheckOut& c) {
        return c.equal ? std::string("CheckResult(equal=True)")
                       : "CheckResult(equal=False, witness='" + *c.witness +
                             "', side='" + *c.side + "')";
      });

  py::class_<HkatOut>(m, "HkatResult")
      .def_readonly("proved", &HkatOut::proved)
      .def_readonly("witness", &HkatOut::witness)
      .def_readonly("side", &HkatOut::side)
      .def_readonly("unsupported", &HkatOut::unsupported)
      .def_readonly("transformed", &HkatOut::transformed)
      .def("__repr__", [](const HkatOut& r) {
        return std::string("HkatResult(proved=") +
               (r.proved ? "True" : "False") + ")";
      });

  m.def(
      "parse_expr",
      [](const kat::Signature& sig, const std::string& text) {
        return PyExpr{kat::parse_expr(sig, text)};
      },
      py::arg("sig"), py::arg("text"));
  m.def(
      "expr_to_text",
      [](const kat::Signature& sig, const PyExpr& e) {
        return kat::print_expr(sig, *e.ptr);
      },
      py::arg("sig"), py::arg("expr"));
  m.def(
      "parse_prog",
      [](const kat::Signature& sig, const std::string& text) {
        return PyProg{kat::parse_prog(sig, text)};
      },
      py::arg("sig"), py::arg("text"));
  m.def(
      "prog_to_text",
      [](const kat::Signature& sig, const PyProg& p) {
        return kat::print_prog(sig, *p.ptr);
      },
      py::arg("sig"), py::arg("prog"));

  m.def(
      "equivalent",
      [](const kat::Signature& sig, const PyExpr& x, const PyExpr& y,
         std::size_t max_states) {
        return to_check_out(
            sig, kat::equivalent(sig, x.ptr, y.ptr, {max_states}));
      },
      py::arg("sig"), py::arg("x"), py::arg("y"),
      py::arg("max_states") = 100000);
  m.def(
      "included",
      [](const kat::Signature& sig, const PyExpr& x, const PyExpr& y,
         std::size_t max_states) {
        return to_check_out(sig,
                            kat::included(sig, x.ptr, y.ptr, {max_states}));
      },
      py::arg("sig"), py::arg("x"), py::arg("y"),
      py::arg("max_states") = 100000);

  m.def(
      "hkat_check",
      [](const kat::Signature& sig, const std::string& goal,
         const std::vector<std::string>& hypotheses, std::size_t max_states) {
        auto hyps = parse_equations(sig, hypotheses);
        return to_hkat_out(sig,
                           kat::hkat_check(sig, kat::parse_equation(sig, goal),
                                           hyps, {max_states}));
      },
      py::arg("sig"), py::arg("goal"),
      py::arg("hypotheses") = std::vector<std::string>{},
      py::arg("max_states") = 100000);

  m.def(
      "prog_equiv",
      [](const kat::Signature& sig, const PyProg& p, const PyProg& q,
         const std::vector<std::string>& hypotheses, std::size_t max_states) {
        auto hyps = parse_equations(sig, hypotheses);
        return to_hkat_out(
            sig, kat::prog_equiv(sig, p.ptr, q.ptr, hyps, {max_states}));
      },
      py::arg("sig"), py::arg("p"), py::arg("q"),
      py::arg("hypotheses") = std::vector<std::string>{},
      py::arg("max_states") = 100000);

  m.def(
      "hoare_check",
      [](const kat::Signature& sig,
         const std::vector<std::tuple<std::string, std::string, std::string>>&
             premises,
         const std::tuple<std::string, std::string, std::string>& goal,
         const std::vector<std::string>& extra_hypotheses,
         std::size_t max_states) {
        std::vector<kat::HoareTriple> ts;
        ts.reserve(premises.size());
        for (const auto& t : premises) ts.push_back(parse_triple(sig, t));
        auto hyps = parse_equations(sig, extra_hypotheses);
        return to_hkat_out(
            sig, kat::hoare_check(sig, ts, hyps, parse_triple(sig, goal),
                                  {max_states}));
      },
      py::arg("sig"), py::arg("premises"), py::arg("goal"),
      py::arg("extra_hypotheses") = std::vector<std::string>{},
      py::arg("max_states") = 100000,
      "Check a Hoare triple (pre, prog, post) from premise triples and extra "
      "equational hypotheses.");

  m.def(
      "gs_member",
      [](const kat::Signature& sig, const std::string& guarded_string,
         const PyExpr& x) {
        return kat::gs_member(sig, kat::parse_guarded_string(sig, guarded_string),
                              x.ptr);
      },
      py::arg("sig"), py::arg("guarded_string"), py::arg("expr"),
      "Whether the guarded string (as printed by witnesses) lies in the "
      "expression's language.");
  m.def(
      "language_size",
      [](const kat::Signature& sig, const PyExpr& x, std::size_t bound) {
        return kat::bounded_language(sig, x.ptr, bound).size();
      },
      py::arg("sig"), py::arg("expr"), py::arg("bound"),
      "Number of guarded strings with at most `bound` letters in the "
      "expression's language (brute-force oracle).");

  m.def(
      "run_goal",
      [](const std::string& text, std::optional<std::size_t> oracle_bound,
         std::size_t max_states, std::size_t atom_limit,
         const std::vector<std::string>& hypotheses) {
        kat::RunOptions opts;
        opts.oracle_bound = oracle_bound;
        opts.max_states = max_states;
        opts.atom_limit = atom_limit;
        opts.hypotheses = hypotheses;
        kat::RunReport rep = kat::run_goal_text(text, opts);
        return py::make_tuple(rep.exit_code, rep.output, rep.warnings);
      },
      py::arg("text"), py::arg("oracle_bound") = std::nullopt,
      py::arg("max_states") = 100000,
      py::arg("atom_limit") = kat::kDefaultAtomLimit,
      py::arg("hypotheses") = std::vector<std::string>{},
      "Run a goal file; returns (exit_code, output, warnings) with the same "
      "codes as the katcheck CLI: 0 proved, 1 not proved, 2 error, 3 "
      "resource limit.");

  m.attr("__version__") = "0.1.0";
}
