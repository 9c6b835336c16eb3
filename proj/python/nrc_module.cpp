// Python bindings for the main operations: symbols, compressions, sweeps,
// closed-form curves and the check suites.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nrc/checks.hpp"
#include "nrc/io.hpp"
#include "nrc/moebius.hpp"
#include "nrc/numrange.hpp"
#include "nrc/order2.hpp"
#include "nrc/order3.hpp"

namespace py = pybind11;
using namespace nrc;

namespace {

py::dict report_to_dict(const CheckReport& rep) {
    py::dict d;
    d["suite"] = rep.suite;
    d["pass"] = rep.pass;
    d["trials"] = rep.trials;
    d["seed"] = rep.seed;
    d["worst_value"] = rep.worst_value;
    d["bound"] = rep.bound;
    py::list recs;
    for (const CheckRecord& r : rep.records) {
        py::dict rd;
        rd["name"] = r.name;
        rd["pass"] = r.pass;
        rd["worst"] = r.worst;
        rd["bound"] = r.bound;
        rd["note"] = r.note;
        recs.append(rd);
    }
    d["records"] = recs;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "numerical ranges of composition operators with finite-order elliptic symbols";

    py::class_<EllipticSymbol>(m, "EllipticSymbol")
        .def_readonly("a", &EllipticSymbol::a)
        .def_readonly("p", &EllipticSymbol::p)
        .def_readonly("k", &EllipticSymbol::k)
        .def_property_readonly("multiplier", &EllipticSymbol::multiplier)
        .def_property_readonly("matrix",
                               [](const EllipticSymbol& s) { return s.map.matrix(); })
        .def("__call__", [](const EllipticSymbol& s, cplx z) { return s.map(z); })
        .def("order_residual",
             [](const EllipticSymbol& s) { return moebius_power(s.map, s.p).identity_residual(); });

    m.def("elliptic_symbol", &elliptic_symbol, py::arg("a"), py::arg("p"), py::arg("k") = 1);
    m.def("default_truncation", &default_truncation, py::arg("a"));

    m.def(
        "composition_matrix",
        [](cplx a, int p, int k, int n, const std::string& basis) {
            EllipticSymbol sym = elliptic_symbol(a, p, k);
            if (n <= 0) n = default_truncation(a);
            OperatorMatrix t = basis == "guyker" ? guyker_matrix(sym, n)
                                                 : composition_matrix(sym, n);
            return t.entries;
        },
        py::arg("a"), py::arg("p"), py::arg("k") = 1, py::arg("n") = 0,
        py::arg("basis") = "monomial");

    m.def(
        "support_sweep",
        [](cplx a, int p, int k, int n, int angles, std::uint64_t seed, const std::string& basis) {
            EllipticSymbol sym = elliptic_symbol(a, p, k);
            if (n <= 0) n = default_truncation(a);
            OperatorMatrix t = basis == "guyker" ? guyker_matrix(sym, n)
                                                 : composition_matrix(sym, n);
            SweepOptions opt;
            opt.eigen.seed = seed;
            auto samples = support_function(t, uniform_angles(angles), opt);
            py::list out;
            for (const SupportSample& s : samples)
                out.append(py::make_tuple(s.alpha, s.lambda, s.point.real(), s.point.imag()));
            return out;
        },
        py::arg("a"), py::arg("p"), py::arg("k") = 1, py::arg("n") = 0, py::arg("angles") = 720,
        py::arg("seed") = 1, py::arg("basis") = "monomial");

    m.def(
        "ellipse_params",
        [](cplx a) {
            EllipseModel e = ellipse_params(a);
            return py::make_tuple(e.semi_major, e.semi_minor);
        },
        py::arg("a"));
    m.def(
        "ellipse_support",
        [](cplx a, double alpha) { return ellipse_support(ellipse_params(a), alpha); },
        py::arg("a"), py::arg("alpha"));

    m.def(
        "order3_geometry",
        [](cplx a) {
            Order3Geometry g = geometry_of(a);
            return py::make_tuple(g.delta, g.big_l);
        },
        py::arg("a"));
    m.def(
        "lambda0", [](double alpha, cplx a) { return lambda0(alpha, geometry_of(a)); },
        py::arg("alpha"), py::arg("a"));
    m.def(
        "lambda_prime",
        [](double alpha, std::array<double, 3> delta, cplx a) {
            return lambda_prime(alpha, delta, geometry_of(a));
        },
        py::arg("alpha"), py::arg("delta"), py::arg("a"));
    m.def(
        "envelope_point",
        [](double alpha, cplx a) {
            cplx z = envelope_point(alpha, geometry_of(a));
            return py::make_tuple(z.real(), z.imag());
        },
        py::arg("alpha"), py::arg("a"));
    m.def(
        "sextic_coeffs",
        [](double big_l) {
            SexticCurve c = sextic_coeffs(big_l);
            py::dict d;
            d["L"] = c.big_l;
            d["P"] = c.p;
            d["Q"] = c.q;
            d["c_mixed"] = c.c_mixed;
            d["c_quartic"] = c.c_quartic;
            d["c_cubic"] = c.c_cubic;
            d["c_quadratic"] = c.c_quadratic;
            d["c_const"] = c.c_const;
            return d;
        },
        py::arg("L"));
    m.def(
        "sextic_eval",
        [](double x, double y, double big_l) { return sextic_eval(x, y, sextic_coeffs(big_l)); },
        py::arg("x"), py::arg("y"), py::arg("L"));
    m.def("chebyshev_zeta", &chebyshev_zeta, py::arg("alpha"));

    m.def(
        "run_check",
        [](const std::string& suite, cplx a, int trials, std::uint64_t seed) {
            auto reports = run_suites(suite, a, trials, seed);
            py::list out;
            for (const CheckReport& r : reports) out.append(report_to_dict(r));
            return out;
        },
        py::arg("suite"), py::arg("a"), py::arg("trials") = 1000, py::arg("seed") = 1);

    m.def(
        "compare",
        [](cplx a, int p, int n, int angles, std::uint64_t seed) {
            CompareOptions opt;
            if (n > 0) opt.n = n;
            opt.angle_count = angles;
            opt.seed = seed;
            if (opt.n >= 4) opt.smaller_truncations = {opt.n / 4, opt.n / 2};
            CompareResult res = compare_numeric_closed(a, p, opt);
            py::dict d;
            d["symmetry_defect"] = res.symmetry_defect;
            d["monotonicity_ok"] = res.monotonicity_ok;
            if (res.has_closed_form) {
                d["hausdorff"] = res.hausdorff_distance;
                d["sup_support_gap"] = res.sup_support_gap;
                d["min_support_gap"] = res.min_support_gap;
                d["upper_bound_ok"] = res.upper_bound_ok;
            }
            return d;
        },
        py::arg("a"), py::arg("p"), py::arg("n") = 0, py::arg("angles") = 720, py::arg("seed") = 1);
}
