#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gft/audit.hpp"
#include "gft/functions.hpp"
#include "gft/heat.hpp"
#include "gft/kernel.hpp"
#include "gft/specfun.hpp"
#include "gft/transform.hpp"

namespace py = pybind11;
using namespace gft;

namespace {

transform::Profile make_profile(const py::object& fn,
                                const DeformParams& params) {
    if (py::isinstance<py::str>(fn))
        return functions::parse_function(fn.cast<std::string>(), params).profile;
    auto callable = fn.cast<std::function<std::complex<double>(double)>>();
    return transform::Profile(std::move(callable));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "one-dimensional (k, 2/n)-generalized Fourier transform core";

    py::register_exception<ParamError>(m, "ParamError");
    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<ConvergenceError>(m, "ConvergenceError");

    py::class_<DeformParams>(m, "DeformParams")
        .def_readonly("k", &DeformParams::k)
        .def_readonly("n", &DeformParams::n)
        .def_readonly("alpha", &DeformParams::alpha)
        .def_readonly("weight_exponent", &DeformParams::weight_exponent)
        .def_readonly("measure_const", &DeformParams::measure_const)
        .def("__repr__", [](const DeformParams& p) {
            return "DeformParams(k=" + std::to_string(p.k) +
                   ", n=" + std::to_string(p.n) + ")";
        });
    m.def("make_params", &make_params, py::arg("k"), py::arg("n"));

    m.def(
        "bessel_normalized",
        [](double alpha, double x) {
            return specfun::bessel_normalized(specfun::BesselOrder(alpha), x);
        },
        py::arg("alpha"), py::arg("x"));
    m.def("gegenbauer", &specfun::gegenbauer, py::arg("n"), py::arg("alpha"),
          py::arg("t"));
    m.def("kummer_1f1", &specfun::kummer_1f1, py::arg("a"), py::arg("b"),
          py::arg("x"));

    m.def(
        "measure_density",
        [](const DeformParams& p, double x) { return measure_density(p, x); },
        py::arg("params"), py::arg("x"));
    m.def(
        "kernel_b",
        [](const DeformParams& p, double x, double lam) {
            const auto kv = kernel_b(p, x, lam);
            return py::make_tuple(kv.value, kv.even_part, kv.odd_part);
        },
        py::arg("params"), py::arg("x"), py::arg("lam"),
        "returns (value, even_part, odd_part)");

    m.def(
        "forward",
        [](const DeformParams& p, const py::object& fn,
           std::vector<double> lambdas, double rel_tol, double radius) {
            quad::QuadSpec spec;
            spec.rel_tol = rel_tol;
            spec.truncation_radius = radius;
            auto res = transform::forward(p, make_profile(fn, p),
                                          std::move(lambdas), spec);
            return py::make_tuple(res.grid.points, res.grid.values,
                                  res.err_estimates);
        },
        py::arg("params"), py::arg("fn"), py::arg("lambdas"),
        py::arg("rel_tol") = 1e-10, py::arg("radius") = 30.0,
        "fn: DSL string or callable; returns (lambdas, values, err_estimates)");

    m.def(
        "inverse",
        [](const DeformParams& p, const py::object& fn, std::vector<double> xs,
           double rel_tol, double radius) {
            quad::QuadSpec spec;
            spec.rel_tol = rel_tol;
            spec.truncation_radius = radius;
            auto res = transform::inverse(p, make_profile(fn, p), std::move(xs),
                                          spec);
            return py::make_tuple(res.grid.points, res.grid.values,
                                  res.err_estimates);
        },
        py::arg("params"), py::arg("fn"), py::arg("xs"),
        py::arg("rel_tol") = 1e-10, py::arg("radius") = 30.0);

    m.def(
        "plancherel_defect",
        [](const DeformParams& p, const py::object& fn) {
            quad::QuadSpec spec;
            return transform::plancherel_defect(p, make_profile(fn, p), spec);
        },
        py::arg("params"), py::arg("fn"));

    m.def(
        "heat_propagate",
        [](const DeformParams& p, const py::object& fn, double t,
           std::vector<double> xs) {
            quad::QuadSpec spec;
            auto st = heat::heat_propagate(p, make_profile(fn, p), t,
                                           std::move(xs), spec);
            return py::make_tuple(st.grid.points, st.grid.values);
        },
        py::arg("params"), py::arg("fn"), py::arg("t"), py::arg("xs"));

    py::class_<audit::DecayEnvelope>(m, "DecayEnvelope")
        .def_readonly("rate", &audit::DecayEnvelope::rate)
        .def_readonly("constant", &audit::DecayEnvelope::constant)
        .def_readonly("residual", &audit::DecayEnvelope::residual)
        .def_readonly("n", &audit::DecayEnvelope::n);

    m.def(
        "fit_envelope",
        [](std::vector<double> xs, std::vector<std::complex<double>> vals,
           int n, double floor) {
            quad::GridFunction g(std::move(xs), std::move(vals),
                                 quad::Provenance::Sampled);
            return audit::fit_envelope(g, n, floor);
        },
        py::arg("xs"), py::arg("values"), py::arg("n"), py::arg("floor") = 0.0);

    m.def(
        "audit",
        [](const DeformParams& p, const py::object& fn, bool functionals) {
            quad::QuadSpec spec;
            audit::AuditOptions opts;
            opts.with_functionals = functionals;
            const auto rep = audit::audit(p, make_profile(fn, p), spec, opts);
            py::dict d;
            d["envelope_f"] = rep.envelope_f;
            d["envelope_Ff"] = rep.envelope_Ff;
            d["product"] = rep.product;
            d["verdict"] = audit::to_string(rep.verdict);
            d["margin"] = rep.margin;
            if (rep.miyachi)
                d["miyachi"] = rep.miyachi->infinite
                                   ? py::object(py::str("infinite"))
                                   : py::object(py::float_(rep.miyachi->value));
            return d;
        },
        py::arg("params"), py::arg("fn"), py::arg("functionals") = false);
}
