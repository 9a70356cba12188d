#pragma once

// Quadrature engines.  The half-line / whole-line routines integrate against
// the weighted measure after the substitution x = ±s^n, which turns the
// fractional-power weight into the polynomial s^{2kn-n+1} and removes the
// kernel's |x|^{1/n} kink at the origin.  Endpoint-singular integrands
// (algebraic weights) go through tanh-sinh; everything else uses adaptive
// Gauss panels with an embedded lower-order error estimate.

#include <complex>
#include <functional>
#include <vector>

#include "gft/errors.hpp"
#include "gft/params.hpp"

namespace gft::quad {

struct QuadSpec {
    double truncation_radius = 30.0; // in the substituted variable s
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    int panel_order = 15;

    void validate() const; // DomainError on nonsense
};

enum class Provenance { Analytic, Sampled, Transformed };

// Sorted sample points with complex values; the exchange format between the
// transform, heat and audit stages.
struct GridFunction {
    std::vector<double> points;
    std::vector<std::complex<double>> values;
    Provenance provenance = Provenance::Sampled;

    GridFunction() = default;
    GridFunction(std::vector<double> pts, std::vector<std::complex<double>> vals,
                 Provenance tag);

    std::size_t size() const { return points.size(); }
};

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double err_est = 0.0;
    bool truncation_warning = false;
    int panels_used = 0;
};

using RealToComplex = std::function<std::complex<double>(double)>;

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre rule of the given order, computed by Newton iteration on the
// Legendre recurrence and cached.
const GaussRule& gauss_rule(int order);

// Adaptive bisection over [a,b]; per-panel error from the embedded rule of
// roughly half the order.  max_panel_width > 0 caps the initial panel width
// (the oscillation guard).  Throws ConvergenceError when the subdivision cap
// is reached with the tolerance unmet.
QuadResult integrate_adaptive(const RealToComplex& f, double a, double b,
                              const QuadSpec& spec, double max_panel_width = 0.0);

// tanh-sinh integrand signature: f(x, x - a, b - x).  The endpoint distances
// are exact to working precision, so algebraic endpoint weights can be formed
// without cancellation.
using EndpointAware =
    std::function<std::complex<double>(double, double, double)>;

QuadResult tanh_sinh(const EndpointAware& f, double a, double b,
                     double tol = 1e-13, int max_level = 10);

// ∫_0^∞ f(s) s^w ds, w > -1, truncated at spec.truncation_radius.  The panel
// touching the origin runs through tanh-sinh (the weight may be singular or
// have unbounded derivatives there); the rest is adaptive Gauss.  Sets
// truncation_warning when the integrand has not decayed at the cutoff.
QuadResult integrate_halfline(const RealToComplex& f, double weight_exponent,
                              const QuadSpec& spec);

// ∫_R f dμ_{k,n} via x = ±s^n on each half-line.
QuadResult integrate_weighted(const RealToComplex& f, const DeformParams& params,
                              const QuadSpec& spec);

} // namespace gft::quad
