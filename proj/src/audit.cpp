#include "gft/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gft::audit {

namespace {

struct FitPoint {
    double t; // |x|^{2/n}
    double y; // log |f(x)|
};

// Chebyshev band half-width of the residuals y - beta t at slope beta.
double band_halfwidth(const std::vector<FitPoint>& pts, double beta,
                      double& center) {
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
        const double r = p.y - beta * p.t;
        hi = std::max(hi, r);
        lo = std::min(lo, r);
    }
    center = 0.5 * (hi + lo);
    return 0.5 * (hi - lo);
}

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Zero: return "Zero";
    case Verdict::GaussianOnly: return "GaussianOnly";
    case Verdict::Underdetermined: return "Underdetermined";
    }
    return "?";
}

DecayEnvelope fit_envelope(const quad::GridFunction& samples, int n,
                           double floor) {
    if (n < 1) throw DomainError("fit_envelope: n must be >= 1");
    if (!(floor >= 0.0)) throw DomainError("fit_envelope: negative floor");
    const double eff_floor = std::max(floor, 1e-300);

    std::vector<FitPoint> pts;
    pts.reserve(samples.size());
    bool any_above_floor = false;
    bool has_far_sample = false;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double m = std::abs(samples.values[i]);
        if (m <= eff_floor) continue;
        any_above_floor = true;
        const double ax = std::abs(samples.points[i]);
        if (ax >= 1.0) has_far_sample = true;
        pts.push_back({std::pow(ax, 2.0 / n), std::log(m)});
    }
    if (!any_above_floor)
        throw FitError("fit_envelope: all samples below the noise floor");
    if (pts.size() < 8)
        throw DegenerateInput("fit_envelope: fewer than 8 usable samples");
    if (!has_far_sample)
        throw DegenerateInput("fit_envelope: no usable sample with |x| >= 1");

    // Minimize the Chebyshev band width over the slope.  The width is convex
    // piecewise-linear in the slope with breakpoints at pairwise slopes, so
    // scanning those (plus the decay boundary) finds the global optimum; ties
    // resolve toward the most negative slope, i.e. the largest rate.
    std::vector<double> candidates;
    candidates.push_back(-1e-12);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double dt = pts[i].t - pts[j].t;
            if (dt == 0.0) continue;
            const double b = (pts[i].y - pts[j].y) / dt;
            if (b < 0.0) candidates.push_back(b);
        }
    if (candidates.size() == 1) {
        bool distinct = false;
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (pts[i].t != pts[0].t) distinct = true;
        if (!distinct)
            throw DegenerateInput("fit_envelope: a single distinct |x| value");
    }

    double best_beta = candidates.front();
    double best_center = 0.0;
    double best_w = std::numeric_limits<double>::infinity();
    for (double beta : candidates) {
        double center;
        const double w = band_halfwidth(pts, beta, center);
        const double tie = 1e-12 * (1.0 + std::abs(best_w));
        if (w < best_w - tie ||
            (std::abs(w - best_w) <= tie && beta < best_beta)) {
            best_w = w;
            best_beta = beta;
            best_center = center;
        }
    }

    DecayEnvelope env;
    env.n = n;
    env.rate = -best_beta / n;
    env.constant = std::exp(best_center);
    env.residual = best_w;
    return env;
}

Verdict hardy_classify(const DecayEnvelope& env_f, const DecayEnvelope& env_Ff,
                       double tol) {
    if (env_f.n != env_Ff.n)
        throw ParamError("hardy_classify: envelopes fitted for different n");
    if (!(tol >= 0.0)) throw DomainError("hardy_classify: negative tolerance");
    const double product = env_f.rate * env_Ff.rate;
    if (product > 0.25 + tol) return Verdict::Zero;
    if (product < 0.25 - tol) return Verdict::Underdetermined;
    return Verdict::GaussianOnly;
}

namespace {

double log_plus(double r) { return r > 1.0 ? std::log(r) : 0.0; }

// Integration radius in σ out to which the evaluable is trusted: where the
// envelope predicts |Ff| to still sit two decades above quadrature accuracy.
double trusted_radius(const DecayEnvelope& env, const quad::QuadSpec& spec,
                      int n) {
    const double scale = env.constant * std::exp(env.residual);
    const double t = std::log(scale / (100.0 * spec.abs_tol)) / (n * env.rate);
    return std::sqrt(std::max(t, 1.0));
}

} // namespace

MaybeInfinite miyachi_functional(const DeformParams& params,
                                 const transform::Profile& Ff, double b,
                                 double C, const quad::QuadSpec& spec,
                                 const std::optional<DecayEnvelope>& tail_envelope) {
    if (!(b > 0.0) || !(C > 0.0))
        throw DomainError("miyachi_functional: b and C must be positive");
    const int n = params.n;

    auto integrand = [&](double sigma) -> std::complex<double> {
        const double grow = std::exp(n * b * sigma * sigma);
        const double x = std::pow(sigma, n);
        return log_plus(std::abs(Ff.fn(x)) * grow / C) +
               log_plus(std::abs(Ff.fn(-x)) * grow / C);
    };

    quad::QuadSpec local = spec;
    bool tail_certified = false;
    if (tail_envelope) {
        // the envelope certifies a vanishing integrand beyond the trusted
        // radius iff it decays strictly faster than e^{-n b t}
        const double edge = trusted_radius(*tail_envelope, spec, n);
        if (tail_envelope->rate > b) {
            const double t_edge = edge * edge;
            const double log_ratio = std::log(tail_envelope->constant) +
                                     tail_envelope->residual -
                                     n * (tail_envelope->rate - b) * t_edge -
                                     std::log(C);
            tail_certified = log_ratio <= 0.0;
        }
        local.truncation_radius = std::min(spec.truncation_radius, edge);
    }

    if (!tail_certified) {
        const double R = local.truncation_radius;
        for (double s : {R, 1.25 * R, 1.6 * R, 2.0 * R}) {
            if (std::abs(integrand(s)) > 1e-9)
                return {std::numeric_limits<double>::infinity(), true};
        }
    }

    auto r = quad::integrate_halfline(integrand, params.substituted_exponent,
                                      local);
    if (r.truncation_warning && !tail_certified)
        return {std::numeric_limits<double>::infinity(), true};
    return {params.measure_const * n * r.value.real(), false};
}

namespace {

MaybeInfinite weighted_lp_norm(const DeformParams& params,
                               const transform::Profile& g, double growth_rate,
                               double p, const quad::QuadSpec& spec,
                               const std::optional<DecayEnvelope>& envelope) {
    const int n = params.n;
    if (std::isinf(p)) {
        // essential-sup scan over a geometric grid in the substituted variable
        double sup = 0.0;
        const double smin = 1e-2, smax = spec.truncation_radius;
        for (int i = 0; i < 96; ++i) {
            const double sigma = smin * std::pow(smax / smin, double(i) / 95.0);
            const double grow = std::exp(n * growth_rate * sigma * sigma);
            const double x = std::pow(sigma, n);
            sup = std::max({sup, std::abs(g.fn(x)) * grow,
                            std::abs(g.fn(-x)) * grow});
        }
        return {sup, false};
    }

    auto integrand = [&](double sigma) -> std::complex<double> {
        const double grow = std::exp(n * growth_rate * sigma * sigma);
        const double x = std::pow(sigma, n);
        return std::pow(std::abs(g.fn(x)) * grow, p) +
               std::pow(std::abs(g.fn(-x)) * grow, p);
    };

    quad::QuadSpec local = spec;
    bool tail_certified = false;
    double tail_bound = 0.0;
    if (envelope) {
        const double edge = trusted_radius(*envelope, spec, n);
        if (envelope->rate > growth_rate) {
            // analytic Gaussian tail bound from the certified envelope
            const double c = n * p * (envelope->rate - growth_rate);
            const double t_edge = edge * edge;
            const double amp =
                std::pow(envelope->constant * std::exp(envelope->residual), p);
            // ∫_edge^∞ e^{-c σ²} σ^{2α+1} dσ <= e^{-c t_edge} σ^{2α} / (2c σ) * margin
            const double sigma_pow =
                std::pow(edge, params.substituted_exponent - 1.0);
            tail_bound = params.measure_const * n * amp *
                         std::exp(-c * t_edge) * sigma_pow / (2.0 * c) * 2.0;
            tail_certified = true;
        }
        local.truncation_radius = std::min(spec.truncation_radius, edge);
    }

    if (!tail_certified) {
        const double R = local.truncation_radius;
        double ref = 0.0;
        for (double s : {0.3 * R, 0.5 * R, 0.7 * R})
            ref = std::max(ref, std::abs(integrand(s)));
        for (double s : {R, 1.3 * R, 1.8 * R}) {
            const double v = std::abs(integrand(s));
            if (v > std::max(spec.abs_tol, 1e-12 * ref))
                return {std::numeric_limits<double>::infinity(), true};
        }
    }

    auto r = quad::integrate_halfline(integrand, params.substituted_exponent,
                                      local);
    if (r.truncation_warning && !tail_certified)
        return {std::numeric_limits<double>::infinity(), true};
    const double total =
        params.measure_const * n * r.value.real() + tail_bound;
    return {std::pow(total, 1.0 / p), false};
}

} // namespace

std::pair<MaybeInfinite, MaybeInfinite> cowling_price_norms(
    const DeformParams& params, const transform::Profile& f,
    const transform::Profile& Ff, double a, double b, double p, double q,
    const quad::QuadSpec& spec, const std::optional<DecayEnvelope>& f_envelope,
    const std::optional<DecayEnvelope>& Ff_envelope) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("cowling_price_norms: a and b must be positive");
    if (!(p >= 1.0) || !(q >= 1.0))
        throw DomainError("cowling_price_norms: p and q must be in [1, inf]");
    if (std::isinf(p) && std::isinf(q))
        throw ParamError("cowling_price_norms: min(p, q) must be finite");
    auto np = weighted_lp_norm(params, f, a, p, spec, f_envelope);
    auto nq = weighted_lp_norm(params, Ff, b, q, spec, Ff_envelope);
    return {np, nq};
}

transform::Profile counterexample_family(const DeformParams& params, double a,
                                         double b, double delta) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("counterexample_family: a and b must be positive");
    if (!(a * b < 0.25))
        throw ParamError("counterexample_family: requires ab < 1/4");
    if (!(delta > a) || !(delta < 0.25 / b))
        throw ParamError("counterexample_family: delta must lie in (a, 1/(4b))");
    const int n = params.n;
    transform::Profile p([n, delta](double x) -> std::complex<double> {
        return std::exp(-delta * n * std::pow(std::abs(x), 2.0 / n));
    });
    p.decay_rate = delta;
    return p;
}

AuditReport audit(const DeformParams& params, const transform::Profile& f,
                  const quad::QuadSpec& spec, const AuditOptions& options) {
    if (options.points_per_sign < 8)
        throw DomainError("audit: needs at least 8 points per sign");
    AuditReport rep;
    const int n = params.n;

    std::vector<double> grid;
    grid.reserve(2 * options.points_per_sign);
    for (int i = 0; i < options.points_per_sign; ++i) {
        const double g =
            options.grid_min *
            std::pow(options.grid_max / options.grid_min,
                     double(i) / (options.points_per_sign - 1));
        grid.push_back(g);
        grid.push_back(-g);
    }
    std::sort(grid.begin(), grid.end());

    // direct envelope of f
    {
        std::vector<std::complex<double>> vals(grid.size());
        double peak = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            vals[i] = f.fn(grid[i]);
            peak = std::max(peak, std::abs(vals[i]));
        }
        quad::GridFunction samples(grid, std::move(vals),
                                   quad::Provenance::Sampled);
        rep.envelope_f =
            fit_envelope(samples, n, options.floor_factor * peak);
    }

    // transform-side envelope
    auto fwd = transform::forward(params, f, grid, spec);
    if (fwd.any_failure) {
        for (const auto& m : fwd.messages) rep.issues.push_back(m);
    }
    double peak_F = 0.0;
    for (const auto& v : fwd.grid.values)
        peak_F = std::max(peak_F, std::abs(v));
    rep.envelope_Ff =
        fit_envelope(fwd.grid, n, options.floor_factor * peak_F);

    rep.product = rep.envelope_f.rate * rep.envelope_Ff.rate;
    rep.margin = std::abs(rep.product - 0.25);
    rep.verdict = hardy_classify(rep.envelope_f, rep.envelope_Ff, options.tol);

    if (options.with_functionals) {
        // evaluate the §-functionals at the fitted envelopes with 1% slack so
        // the sharp (equality) case stays on the finite side
        transform::TransformEvaluable Feval(params, f, spec);
        transform::Profile Fprofile(
            [Feval](double x) { return Feval(x); });
        Fprofile.decay_rate = rep.envelope_Ff.rate;
        const double b_used = 0.99 * rep.envelope_Ff.rate;
        const double c_used = 1.01 * rep.envelope_Ff.constant *
                              std::exp(rep.envelope_Ff.residual);
        try {
            rep.miyachi = miyachi_functional(params, Fprofile, b_used, c_used,
                                             spec, rep.envelope_Ff);
        } catch (const Error& e) {
            rep.issues.push_back(std::string("miyachi: ") + e.what());
        }
        try {
            rep.cowling_price = cowling_price_norms(
                params, f, Fprofile, 0.99 * rep.envelope_f.rate, b_used,
                options.cp_p, options.cp_q, spec, rep.envelope_f,
                rep.envelope_Ff);
        } catch (const Error& e) {
            rep.issues.push_back(std::string("cowling_price: ") + e.what());
        }
    }
    return rep;
}

} // namespace gft::audit
