#pragma once

// Decay-envelope fitting and the uncertainty-principle audit: fit tight
// deformed-Gaussian envelopes C e^{-n a |x|^{2/n}} to a function and its
// transform, classify the rate product against the 1/4 threshold, and
// evaluate the log⁺ / weighted-norm functionals.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gft/transform.hpp"

namespace gft::audit {

struct DecayEnvelope {
    double rate = 0.0;     // the a of C e^{-n a |x|^{2/n}}
    double constant = 0.0; // the C
    double residual = 0.0; // max violation of the bound over fit samples (log scale)
    int n = 1;
};

// Tight minimax envelope: a Chebyshev line fit of log|f| against |x|^{2/n},
// ties broken toward the largest rate.  floor excludes samples that carry no
// envelope information.
DecayEnvelope fit_envelope(const quad::GridFunction& samples, int n, double floor);

enum class Verdict { Zero, GaussianOnly, Underdetermined };
const char* to_string(Verdict v);

// product > 1/4 + tol → Zero; |product - 1/4| <= tol → GaussianOnly;
// product < 1/4 - tol → Underdetermined.
Verdict hardy_classify(const DecayEnvelope& env_f, const DecayEnvelope& env_Ff,
                       double tol);

struct MaybeInfinite {
    double value = 0.0;
    bool infinite = false;
};

// ∫ log⁺ | e^{n b |x|^{2/n}} Ff(x) / C | dμ_{k,n}(x).  When a fitted envelope
// of Ff is supplied it certifies the far tail (where the evaluable is below
// quadrature accuracy); otherwise the tail is probed by sampling and a
// non-vanishing integrand at the truncation radius escalates to Infinite.
MaybeInfinite miyachi_functional(const DeformParams& params,
                                 const transform::Profile& Ff, double b, double C,
                                 const quad::QuadSpec& spec,
                                 const std::optional<DecayEnvelope>& tail_envelope = {});

// (‖e^{na|x|^{2/n}} f‖_{L^p}, ‖e^{nb|x|^{2/n}} Ff‖_{L^q}); p or q may be
// +infinity (essential-sup scan), but not both.
std::pair<MaybeInfinite, MaybeInfinite> cowling_price_norms(
    const DeformParams& params, const transform::Profile& f,
    const transform::Profile& Ff, double a, double b, double p, double q,
    const quad::QuadSpec& spec,
    const std::optional<DecayEnvelope>& f_envelope = {},
    const std::optional<DecayEnvelope>& Ff_envelope = {});

// f_δ(x) = e^{-δ n |x|^{2/n}} for a < δ < 1/(4b); ParamError outside.
transform::Profile counterexample_family(const DeformParams& params, double a,
                                         double b, double delta);

struct AuditOptions {
    double floor_factor = 1e-12; // noise floor, relative to max |f|
    double tol = 0.02;           // classification tolerance on the product
    double grid_min = 0.25;      // geometric sample grid per sign
    double grid_max = 25.0;
    int points_per_sign = 64;
    bool with_functionals = false;
    double cp_p = 2.0;
    double cp_q = 2.0;
};

struct AuditReport {
    DecayEnvelope envelope_f;
    DecayEnvelope envelope_Ff;
    double product = 0.0;
    Verdict verdict = Verdict::Underdetermined;
    double margin = 0.0; // |product - 1/4|
    std::optional<MaybeInfinite> miyachi;
    std::optional<std::pair<MaybeInfinite, MaybeInfinite>> cowling_price;
    std::vector<std::string> issues;
};

AuditReport audit(const DeformParams& params, const transform::Profile& f,
                  const quad::QuadSpec& spec, const AuditOptions& options = {});

} // namespace gft::audit
