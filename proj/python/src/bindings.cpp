#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "polya/bounds.hpp"
#include "polya/cli.hpp"
#include "polya/forms.hpp"
#include "polya/simplex_opt.hpp"

namespace py = pybind11;
using namespace polya;

namespace {

// Exact values cross the boundary as fractions.Fraction / int; floats are refused.
Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
  if (py::isinstance<py::float_>(obj)) {
    throw py::type_error("floats are not accepted; pass int, str or fractions.Fraction");
  }
  if (!py::hasattr(obj, "numerator") || !py::hasattr(obj, "denominator")) {
    throw py::type_error("expected int, str or fractions.Fraction");
  }
  const auto num = py::str(obj.attr("numerator")).cast<std::string>();
  const auto den = py::str(obj.attr("denominator")).cast<std::string>();
  return make_rational(Integer(num), Integer(den));
}

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::object builtins_int = py::module_::import("builtins").attr("int");
  return fraction(builtins_int(r.get_num().get_str()), builtins_int(r.get_den().get_str()));
}

py::object to_py(const Integer& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

py::tuple to_py(const SimplexPoint& t) {
  py::tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = to_py(t[i]);
  return out;
}

QuadraticForm to_form(const py::sequence& rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& v : row.cast<py::sequence>()) r.push_back(to_rational(v));
    m.push_back(std::move(r));
  }
  return QuadraticForm(m);
}

py::list to_py(const QuadraticForm& q) {
  py::list rows;
  for (std::size_t i = 0; i < q.size(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < q.size(); ++j) row.append(to_py(q(i, j)));
    rows.append(row);
  }
  return rows;
}

py::object optional_integer(const std::optional<Integer>& z) {
  return z ? to_py(*z) : py::object(py::none());
}

py::dict optimum_dict(const OptimumResult& r) {
  py::dict d;
  d["value"] = to_py(r.value);
  d["argpoint"] = to_py(r.argpoint);
  d["candidates_examined"] = r.candidates_examined;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Polya-exponent bounds for quadratic forms on the standard simplex";

  static py::exception<NotPositiveOnSimplex> not_positive(m, "NotPositiveOnSimplex", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotPositiveOnSimplex& e) {
      not_positive(e.what());
    }
  });

  m.def("associated_form", [](const py::sequence& q) { return to_py(associated_form(to_form(q))); },
        py::arg("matrix"), "Matrix of the associated form, entries (a_ii + a_jj) / 2.");

  m.def(
      "expand",
      [](const py::sequence& q, unsigned power) {
        const SparseForm g = expand(quadratic_to_form(to_form(q)), power);
        py::dict out;
        for (const auto& [beta, c] : g.terms()) {
          py::tuple key(beta.size());
          for (std::size_t i = 0; i < beta.size(); ++i) key[i] = beta[i];
          out[key] = to_py(c);
        }
        return out;
      },
      py::arg("matrix"), py::arg("m"),
      "Coefficients of (x_1 + ... + x_n)^m f keyed by exponent tuple; zeros omitted.");

  m.def(
      "strictly_positive_coefficients",
      [](const py::sequence& q, unsigned power) {
        return strictly_positive_coefficients(expand(quadratic_to_form(to_form(q)), power));
      },
      py::arg("matrix"), py::arg("m") = 0);

  m.def("min_over_simplex", [](const py::sequence& q) { return optimum_dict(min_over_simplex(to_form(q))); },
        py::arg("matrix"));
  m.def("max_over_simplex", [](const py::sequence& q) { return optimum_dict(max_over_simplex(to_form(q))); },
        py::arg("matrix"));
  m.def("is_positive_on_simplex", [](const py::sequence& q) { return is_positive_on_simplex(to_form(q)); },
        py::arg("matrix"));

  m.def(
      "sup_ratio_floor",
      [](const py::sequence& num, const py::sequence& den) {
        return to_py(sup_ratio_floor(to_form(num), to_form(den)));
      },
      py::arg("num"), py::arg("den"));

  m.def("bound_new", [](const py::sequence& q) { return to_py(bound_new(to_form(q))); }, py::arg("matrix"));
  m.def("bound_corollary", [](const py::sequence& q) { return to_py(bound_corollary(to_form(q))); },
        py::arg("matrix"));
  m.def("bound_klp", [](const py::sequence& q) { return to_py(bound_klp(to_form(q))); }, py::arg("matrix"));

  m.def(
      "bound_report",
      [](const py::sequence& q) {
        const BoundReport r = bound_report(to_form(q));
        py::dict d;
        d["positive_on_simplex"] = r.positive();
        d["min_f"] = to_py(r.min_f);
        d["argmin"] = to_py(r.argmin);
        d["diag_max"] = to_py(r.diag_max);
        d["entry_max"] = to_py(r.entry_max);
        d["ratio_floor"] = optional_integer(r.ratio_floor);
        d["bound_new"] = optional_integer(r.bound_new);
        d["bound_new_usable"] = optional_integer(r.usable_bound_new());
        d["bound_corollary"] = optional_integer(r.bound_corollary);
        d["bound_klp"] = optional_integer(r.bound_klp);
        return d;
      },
      py::arg("matrix"));

  m.def(
      "polya_exponent",
      [](const py::sequence& q, std::optional<unsigned> cap) {
        const QuadraticForm f = to_form(q);
        unsigned c = 0;
        if (cap) {
          c = *cap;
        } else if (is_positive_on_simplex(f)) {
          c = default_exponent_cap(f);
        }
        const ExponentResult r = exact_polya_exponent(f, c);
        py::dict d;
        d["outcome"] = to_string(r.outcome);
        d["exponent"] = r.outcome == ExponentOutcome::Found ? py::object(py::int_(r.exponent))
                                                            : py::object(py::none());
        d["cap"] = c;
        d["min_f"] = to_py(r.minimum.value);
        d["argmin"] = to_py(r.minimum.argpoint);
        return d;
      },
      py::arg("matrix"), py::arg("cap") = py::none(),
      "Exact Polya exponent; outcome is 'found', 'cap_exceeded' or 'certified_infinite'.");

  m.def(
      "identity_rhs",
      [](const py::sequence& q, const py::sequence& t, unsigned power) {
        std::vector<Rational> coords;
        for (const auto& v : t) coords.push_back(to_rational(v));
        return to_py(identity_rhs(to_form(q), SimplexPoint(coords), power));
      },
      py::arg("matrix"), py::arg("t"), py::arg("m"));

  m.def("check_identity", [](const py::sequence& q, unsigned power) { return check_identity(to_form(q), power); },
        py::arg("matrix"), py::arg("m"));

  m.def(
      "fkappa_report",
      [](const py::handle& kappa, const py::sequence& lambdas) {
        std::vector<Rational> ls;
        for (const auto& l : lambdas) ls.push_back(to_rational(l));
        py::list rows;
        for (const FKappaRow& row : fkappa_report(to_rational(kappa), ls)) {
          py::dict d;
          d["lambda"] = to_py(row.lambda);
          d["bound_new"] = to_py(row.bound_new);
          d["bound_corollary"] = to_py(row.bound_corollary);
          d["bound_klp"] = to_py(row.bound_klp);
          d["sup_ratio_minus_one"] =
              row.sup_ratio_minus_one ? to_py(*row.sup_ratio_minus_one) : py::object(py::none());
          d["closed_form_sup_ratio_minus_one"] = to_py(row.closed_form_sup_minus_one);
          d["min_f"] = to_py(row.min_f);
          d["closed_form_min_f"] = to_py(row.closed_form_min_f);
          d["ratio"] = to_py(row.ratio);
          d["predicted_ratio"] = to_py(row.predicted_ratio);
          rows.append(d);
        }
        return rows;
      },
      py::arg("kappa"), py::arg("lambdas"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        const cli::RunResult r = cli::run(args, in);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"), py::arg("stdin") = "",
      "Runs the polya command line in-process; returns (exit_code, stdout, stderr).");

  m.attr("__version__") = cli::version();
}
