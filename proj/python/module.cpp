#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "equiloc/cli.hpp"
#include "equiloc/error.hpp"
#include "equiloc/hyperbolicity.hpp"
#include "equiloc/jet.hpp"
#include "equiloc/localization.hpp"
#include "equiloc/parse.hpp"
#include "equiloc/residue.hpp"
#include "equiloc/thom.hpp"

namespace py = pybind11;
using namespace equiloc;

namespace {

// Rationals cross the boundary as strings; the Python layer wraps them in Fraction.
std::vector<std::string> strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

JetCurve jet_of(const std::vector<std::vector<std::string>>& rows) {
  JetCurve g;
  g.n = rows.empty() ? 0 : int(rows[0].size());
  for (const auto& row : rows) {
    if (int(row.size()) != g.n) throw Error(ErrorKind::invalid_argument, "ragged jet coordinates");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(parse_rational(x));
    g.v.push_back(std::move(r));
  }
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> exc(m, "EquilocError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(exc.ptr())(e.what());
      err.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(exc.ptr(), err.ptr());
    }
  });

  m.def("canonical", [](const std::string& s) { return parse_polynomial(s).to_string(); });

  m.def(
      "residue",
      [](const std::string& numerator, const std::vector<std::string>& denominators,
         const std::vector<std::string>& order, int cap) {
        ResidueForm f;
        f.numerator = LaurentSeries(parse_polynomial(numerator));
        for (const auto& d : denominators) f.denominators.push_back(AffineForm::from_polynomial(parse_polynomial(d)));
        for (const auto& v : order) {
          Var var;
          if (!parse_var(v, var) || !var.is_residue()) throw Error(ErrorKind::parse, "not a residue variable: " + v);
          f.ordering.push_back(var);
        }
        ResidueOptions o;
        o.cap = cap;
        return iterated_residue(f, o).to_string();
      },
      py::arg("numerator"), py::arg("denominators"), py::arg("order"), py::arg("cap") = ResidueOptions{}.cap);

  m.def(
      "grass_integrate",
      [](int n, int k, const std::string& cls, std::uint64_t seed) {
        return to_string(grass_integrate(n, k, parse_polynomial(cls), seed));
      },
      py::arg("n"), py::arg("k"), py::arg("cls"), py::arg("seed") = 1);

  m.def(
      "flag_check",
      [](int n, int d, int trials, std::uint64_t seed) { return flag_check(n, d, trials, seed).all_agree(); },
      py::arg("n"), py::arg("d"), py::arg("trials"), py::arg("seed") = 1);

  m.def(
      "thom", [](int k, int codim) { return thom_polynomial(k, codim, QTable::builtin()).polynomial.to_string(); },
      py::arg("k"), py::arg("codim"));

  m.def("theta", [](int n) { return to_string(theta(n, QTable::builtin())); }, py::arg("n"));

  m.def(
      "gg",
      [](int n) {
        const auto r = gg_polynomial(n, QTable::builtin());
        return std::map<std::string, std::string>{{"p", r.p.to_string()},
                                                  {"intersection", r.intersection.to_string()},
                                                  {"theta", to_string(r.theta)},
                                                  {"leading", r.leading.to_string()}};
      },
      py::arg("n"));

  m.def(
      "euler",
      [](int n, std::optional<std::string> d) {
        std::optional<Rational> dv;
        if (d) dv = parse_rational(*d);
        return euler_characteristic(n, QTable::builtin(), dv).chi.to_string();
      },
      py::arg("n"), py::arg("d") = py::none());

  m.def(
      "rho",
      [](const std::vector<std::vector<std::string>>& v) {
        std::vector<std::vector<std::string>> out;
        for (const auto& row : rho(jet_of(v))) out.push_back(strings(row));
        return out;
      },
      py::arg("v"));

  m.def(
      "rho_symbolic",
      [](int n, int k) {
        std::vector<std::vector<std::string>> out;
        for (const auto& row : rho_symbolic(n, k)) {
          std::vector<std::string> r;
          for (const auto& p : row) r.push_back(p.to_string());
          out.push_back(std::move(r));
        }
        return out;
      },
      py::arg("n"), py::arg("k"));

  m.def("minors", [](const std::vector<std::vector<std::string>>& v) { return strings(invariant_minors(jet_of(v))); },
        py::arg("v"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
