#pragma once

// The Dunkl Laplacian, the spectral heat propagator u_t = F^{-1}[e^{-n|ξ|^{2/n} t} F u_0],
// PDE-residual and symbol-identity meters, spectral convolution, and the
// dynamical Hardy check.

#include <functional>
#include <utility>
#include <vector>

#include "gft/audit.hpp"
#include "gft/transform.hpp"

namespace gft::heat {

struct HeatState {
    double time = 0.0;
    quad::GridFunction grid;
    DeformParams params;
};

// Δ_k f(x) = f''(x) + (2k/x) f'(x) - k (f(x) - f(-x))/x², x ≠ 0.
std::complex<double> dunkl_laplacian(double k, const quad::RealToComplex& f,
                                     const quad::RealToComplex& df,
                                     const quad::RealToComplex& d2f, double x);

// Same, with the derivatives replaced by central differences of step h.
std::complex<double> dunkl_laplacian_fd(double k, const quad::RealToComplex& f,
                                        double x, double h = 1e-3);

// u(t, ·) sampled at xs; t = 0 reproduces u0 up to the round-trip tolerance.
HeatState heat_propagate(const DeformParams& params,
                         const transform::Profile& u0, double t,
                         std::vector<double> xs, const quad::QuadSpec& spec);

// u(t, ·) as a reusable profile: the propagated solution is sampled densely
// in the substituted variable and wrapped in a cubic spline per sign, so it
// can be fed back into the transform/propagation machinery.
transform::Profile heat_solution_profile(const DeformParams& params,
                                         const transform::Profile& u0, double t,
                                         const quad::QuadSpec& spec);

// max over probes of |n |x|^{2-2/n} Δ_k u - ∂_t u| with central differences.
double heat_residual(const DeformParams& params,
                     const std::function<std::complex<double>(double, double)>& u,
                     const std::vector<std::pair<double, double>>& probes,
                     double h_t = 1e-3, double h_x = 1e-3);

// Residual from three sampled slices at times t-h, t, t+h on one symmetric
// uniform grid; probes are the interior grid points with |x| >= 0.05.
double heat_residual(const DeformParams& params, const HeatState& prev,
                     const HeatState& mid, const HeatState& next);

// A profile together with its Dunkl Laplacian (analytic when available).
struct DifferentiableProfile {
    transform::Profile profile;
    quad::RealToComplex dunkl;
};

DifferentiableProfile with_fd_laplacian(const DeformParams& params,
                                        transform::Profile f, double h = 1e-3);

// max over lambdas of |F(|x|^{2-2/n} Δ_k f)(λ) + |λ|^{2/n} F f(λ)|.
// ParamError unless 2k + 2/n - 2 > 0.
double symbol_defect(const DeformParams& params, const DifferentiableProfile& f,
                     const std::vector<double>& lambdas,
                     const quad::QuadSpec& spec);

// f ⋆ g sampled at xs, computed through F(f ⋆ g) = Ff · Fg.
quad::GridFunction convolve_spectral(const DeformParams& params,
                                     const transform::Profile& f,
                                     const transform::Profile& g,
                                     std::vector<double> xs,
                                     const quad::QuadSpec& spec);

struct DynamicalHardyReport {
    double T = 0.0;
    double threshold = 0.0; // 1/(4T)
    double delta_est = 0.0; // fitted decay rate of u(T, ·)
    double u0_norm = 0.0;
    audit::DecayEnvelope envelope{};
    enum class Verdict { ZeroSolution, Consistent, Contradiction } verdict =
        Verdict::Consistent;
};

// Nonzero u0 must force delta_est < 1/(4T); a contradiction is flagged, not
// proven.
DynamicalHardyReport dynamical_hardy_check(const DeformParams& params,
                                           const transform::Profile& u0,
                                           double T, const quad::QuadSpec& spec);

} // namespace gft::heat
