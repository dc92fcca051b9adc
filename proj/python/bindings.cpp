#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "symgen/error.hpp"
#include "symgen/genera.hpp"
#include "symgen/graded_spaces.hpp"
#include "symgen/io.hpp"
#include "symgen/prelambda.hpp"
#include "symgen/sym_group.hpp"

namespace py = pybind11;
using namespace symgen;

namespace {

using DimsDict = std::map<std::tuple<int, int, int>, std::int64_t>;

py::object to_fraction(const Rational &r)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.get_str());
}

Rational from_python_number(const py::handle &h)
{
    // int, Fraction and str all print as "p" or "p/q".
    const std::string text = py::str(h);
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw input_error("expected a rational number, got '" + text + "'");
    }
    q.canonicalize();
    return q;
}

GradedDims dims_from_dict(const DimsDict &d)
{
    GradedDims v;
    for (const auto &[key, n] : d) {
        const auto &[p, q, k] = key;
        v.add({p, q, k}, n);
    }
    return v;
}

template <class Dims>
DimsDict dims_to_dict(const Dims &v)
{
    DimsDict d;
    for (const auto &[deg, n] : v.entries()) {
        d[{deg.p, deg.q, deg.k}] = n;
    }
    return d;
}

VariableSet vars_from_letters(const std::string &letters) { return VariableSet::from_letters(letters); }

GenusProfile make_profile(const std::string &kind_name, const py::object &data, const std::string &name)
{
    const GenusKind kind = parse_genus_kind(kind_name);
    switch (kind) {
    case GenusKind::euler:
        return GenusProfile::euler(name, Integer(std::string(py::str(data))));
    case GenusKind::signature: {
        const auto pair = data.cast<std::pair<long long, long long>>();
        GenusProfile p = GenusProfile::signature(name, Integer(std::to_string(pair.first)), Integer(std::to_string(pair.second)));
        p.validate();
        return p;
    }
    default:
        if (py::isinstance<LaurentPoly>(data)) {
            return GenusProfile::polynomial(name, kind, data.cast<LaurentPoly>());
        }
        return GenusProfile::polynomial(name, kind, parse_poly(data.cast<std::string>(), variables_for(kind)));
    }
}

std::vector<LaurentPoly> coefficients(const PolySeries &s) { return s.coefficients(); }

py::list scalar_coefficients(const RationalSeries &s)
{
    py::list out;
    for (const auto &c : s.coefficients()) {
        out.append(to_fraction(c));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_symgen, m)
{
    m.doc() = "Generating series of invariants of symmetric products";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<consistency_error>(m, "ConsistencyError", PyExc_ArithmeticError);

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def_property_readonly("variables", [](const LaurentPoly &p) { return p.variables().names(); })
        .def("terms",
             [](const LaurentPoly &p) {
                 py::dict d;
                 for (const auto &[mono, c] : p.terms()) {
                     d[py::tuple(py::cast(mono.exponents))] = to_fraction(c);
                 }
                 return d;
             })
        .def("coefficient",
             [](const LaurentPoly &p, const std::vector<int> &exponents) {
                 return to_fraction(p.coefficient(Monomial{exponents}));
             })
        .def("adams", &LaurentPoly::adams, py::arg("r"))
        .def(
            "specialize",
            [](const LaurentPoly &p, const py::dict &assignment) {
                std::map<std::string, LaurentPoly::Value> a;
                for (const auto &[k, v] : assignment) {
                    const auto key = k.cast<std::string>();
                    if (py::isinstance<LaurentPoly>(v)) {
                        a.emplace(key, v.cast<LaurentPoly>());
                    } else {
                        a.emplace(key, from_python_number(v));
                    }
                }
                return p.specialize(a);
            },
            py::arg("assignment"))
        .def("is_zero", &LaurentPoly::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const LaurentPoly &p, unsigned e) { return p.pow(e); })
        .def("__str__", &LaurentPoly::to_string)
        .def("__repr__", [](const LaurentPoly &p) { return "LaurentPoly('" + p.to_string() + "')"; });

    m.def(
        "parse_poly", [](const std::string &text, const std::string &vars) { return parse_poly(text, vars_from_letters(vars)); },
        py::arg("text"), py::arg("vars") = "yxz", "Parse a polynomial over one-letter variables, e.g. vars='yxz'.");

    m.def(
        "symmetric_series",
        [](const std::string &kind, const py::object &data, int order) {
            return coefficients(symmetric_series(make_profile(kind, data, "input"), order));
        },
        py::arg("kind"), py::arg("data"), py::arg("order") = default_order,
        "Coefficients of sum_n I(X^(n)) t^n. data is a polynomial (text or LaurentPoly), chi for euler, "
        "or (sigma, chi) for signature.");
    m.def(
        "configuration_series",
        [](const std::string &kind, const py::object &data, int order) {
            return coefficients(configuration_series(make_profile(kind, data, "input"), order));
        },
        py::arg("kind"), py::arg("data"), py::arg("order") = default_order);
    m.def(
        "signature_series",
        [](long long sigma, long long chi, int order) {
            return scalar_coefficients(signature_series(Integer(std::to_string(sigma)), Integer(std::to_string(chi)), order));
        },
        py::arg("sigma"), py::arg("chi"), py::arg("order") = default_order);
    m.def(
        "sigma_series", [](const LaurentPoly &p, int order) { return coefficients(sigma_series(p, order)); },
        py::arg("poly"), py::arg("order") = default_order);
    m.def(
        "lambda_series", [](const LaurentPoly &p, int order) { return coefficients(lambda_series(p, order)); },
        py::arg("poly"), py::arg("order") = default_order);
    m.def(
        "adams_from_sigma", [](const LaurentPoly &p, int order) { return adams_from_sigma(sigma_series(p, order)); },
        py::arg("poly"), py::arg("order") = default_order, "Psi_1..Psi_N recovered from the log of sigma_t(poly).");

    m.def(
        "character_table",
        [](int n) {
            const auto t = character_table(n);
            std::vector<std::vector<int>> classes;
            for (const auto &mu : t.classes) {
                classes.push_back(mu.parts());
            }
            return py::make_tuple(classes, t.values);
        },
        py::arg("n"), "(classes, values) with values[i][j] = chi_{classes[i]}(classes[j]).");

    m.def(
        "hodge_poly", [](const DimsDict &d) { return hodge_poly(dims_from_dict(d)); }, py::arg("dims"));
    m.def(
        "sym_power_brute", [](const DimsDict &d, int n) { return dims_to_dict(sym_power_brute(dims_from_dict(d), n)); },
        py::arg("dims"), py::arg("n"));
    m.def(
        "alt_power_brute", [](const DimsDict &d, int n) { return dims_to_dict(alt_power_brute(dims_from_dict(d), n)); },
        py::arg("dims"), py::arg("n"));
    m.def(
        "schur_multiplicity",
        [](const DimsDict &d, int n, const std::vector<int> &lambda) {
            return dims_to_dict(schur_multiplicity(dims_from_dict(d), n, Partition(lambda)));
        },
        py::arg("dims"), py::arg("n"), py::arg("partition"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run one CLI invocation in-process; returns (exit_code, stdout, stderr).");
}
