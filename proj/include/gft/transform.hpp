#pragma once

// The (k, 2/n)-generalized Fourier transform, its inverse, the even/odd
// deformations T1/T2 (entire in z), Plancherel and growth-bound meters.
//
// All integrals run in the substituted variable x = ±s^n over [0, R]; per
// output point the engine shares one dyadic panel tree for the profile
// samples, so batches over λ (or over x for the inverse) pay the profile
// evaluation cost once.

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gft/kernel.hpp"
#include "gft/params.hpp"
#include "gft/quadrature.hpp"

namespace gft::transform {

// A function on the line plus decay metadata used to pick truncation radii.
// decay_rate is the a of a dominating bound C e^{-n a |x|^{2/n}} (C of order
// one); support_radius marks compact support.  Without a hint the engine
// integrates out to the spec's truncation radius.
struct Profile {
    quad::RealToComplex fn;
    std::optional<double> decay_rate;
    std::optional<double> support_radius;

    Profile() = default;
    Profile(quad::RealToComplex f) : fn(std::move(f)) {}
    Profile(quad::RealToComplex f, double rate)
        : fn(std::move(f)), decay_rate(rate) {}
};

struct PointValue {
    std::complex<double> value{0.0, 0.0};
    double err_est = 0.0;
    bool warning = false; // truncation not certified small
    bool failed = false;  // quadrature did not converge; value is unusable
    std::string message;
};

struct TransformResult {
    quad::GridFunction grid; // sorted evaluation points with values
    std::vector<double> err_estimates;
    DeformParams params;
    bool any_warning = false;
    bool any_failure = false;
    std::vector<std::string> messages;
};

namespace detail {
class Engine;
}

// Shared-state wrapper: repeated evaluations at different points reuse the
// profile's panel samples.  Thread-safe; deterministic for a fixed spec.
class TransformEvaluable {
  public:
    TransformEvaluable(const DeformParams& params, Profile f,
                       quad::QuadSpec spec);
    PointValue at(double lambda) const;
    std::complex<double> operator()(double lambda) const; // throws on failure
    const DeformParams& params() const;

  private:
    std::shared_ptr<detail::Engine> impl_;
};

// F f(λ) = ∫ f(x) B_{k,n}(x, λ) dμ_{k,n}(x) at each λ.  Quadrature failures
// flag the affected point but do not abort the batch.
TransformResult forward(const DeformParams& params, const Profile& f,
                        std::vector<double> lambdas, const quad::QuadSpec& spec);

// F^{-1} g(x) = F g((-1)^n x).
TransformResult inverse(const DeformParams& params, const Profile& g,
                        std::vector<double> xs, const quad::QuadSpec& spec);

// T1 f(z) = ∫ f_e(u) j_{kn-n/2}(n z |u|^{1/n}) dμ(u); entire in z.  On the
// real axis T1 f(x) = (F f_e)(x^n).
std::vector<std::complex<double>> t1(const DeformParams& params, const Profile& f,
                                     const std::vector<std::complex<double>>& zs,
                                     const quad::QuadSpec& spec);

// T2: the odd counterpart, carrying the (-i)^n (n/2)^n Gamma-ratio constant
// and the z^n factor; on the real axis T2 f(x) = (F f_o)(x^n).
std::vector<std::complex<double>> t2(const DeformParams& params, const Profile& f,
                                     const std::vector<std::complex<double>>& zs,
                                     const quad::QuadSpec& spec);

// | ‖Ff‖ - ‖f‖ | / ‖f‖ in L²_{k,n}; DegenerateInput when ‖f‖ = 0.
double plancherel_defect(const DeformParams& params, const Profile& f,
                         const quad::QuadSpec& spec);

struct GrowthSample {
    std::complex<double> z;
    double t1_ratio = 0.0; // |T1 f(z)| e^{-(n/4a) Im(z)^2}
    double t2_ratio = 0.0;
};

struct GrowthReport {
    std::vector<GrowthSample> samples;
    double max_t1_ratio = 0.0;
    double max_t2_ratio = 0.0;
};

// Profile must carry decay_rate (the a of the envelope hypothesis).
GrowthReport growth_bound_check(const DeformParams& params, const Profile& f,
                                const std::vector<std::complex<double>>& zs,
                                const quad::QuadSpec& spec);

} // namespace gft::transform
