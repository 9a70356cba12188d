#include "gft/heat.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace gft::heat {

namespace {

void check_probe(double x) {
    if (std::abs(x) < 0.05)
        throw SingularPointError(
            "heat: probes must stay away from the x = 0 singular point");
}

// natural cubic spline on a uniform grid; evaluates to 0 outside
class UniformSpline {
  public:
    UniformSpline(double x0, double dx, std::vector<std::complex<double>> y)
        : x0_(x0), dx_(dx), y_(std::move(y)) {
        const std::size_t m = y_.size();
        m2_.assign(m, {0.0, 0.0});
        if (m < 3) return;
        // tridiagonal system m2[i-1] + 4 m2[i] + m2[i+1] = d_i on the interior
        std::vector<double> cp(m, 0.0);
        std::vector<std::complex<double>> dp(m, {0.0, 0.0});
        auto d = [&](std::size_t i) {
            return 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (dx_ * dx_);
        };
        cp[1] = 1.0 / 4.0;
        dp[1] = d(1) / 4.0;
        for (std::size_t i = 2; i + 1 < m; ++i) {
            const double denom = 4.0 - cp[i - 1];
            cp[i] = 1.0 / denom;
            dp[i] = (d(i) - dp[i - 1]) / denom;
        }
        for (std::size_t i = m - 2; i >= 1; --i) {
            m2_[i] = dp[i] - cp[i] * m2_[i + 1];
            if (i == 1) break;
        }
    }

    std::complex<double> operator()(double x) const {
        const double u = (x - x0_) / dx_;
        if (u < 0.0 || u > double(y_.size() - 1)) return {0.0, 0.0};
        std::size_t i = std::min<std::size_t>(std::size_t(u), y_.size() - 2);
        const double a = u - double(i);
        const double b = 1.0 - a;
        return b * y_[i] + a * y_[i + 1] +
               ((b * b * b - b) * m2_[i] + (a * a * a - a) * m2_[i + 1]) *
                   (dx_ * dx_) / 6.0;
    }

  private:
    double x0_, dx_;
    std::vector<std::complex<double>> y_;
    std::vector<std::complex<double>> m2_;
};

} // namespace

std::complex<double> dunkl_laplacian(double k, const quad::RealToComplex& f,
                                     const quad::RealToComplex& df,
                                     const quad::RealToComplex& d2f, double x) {
    if (x == 0.0)
        throw SingularPointError("dunkl_laplacian: x = 0");
    return d2f(x) + (2.0 * k / x) * df(x) - k * (f(x) - f(-x)) / (x * x);
}

std::complex<double> dunkl_laplacian_fd(double k, const quad::RealToComplex& f,
                                        double x, double h) {
    if (x == 0.0)
        throw SingularPointError("dunkl_laplacian_fd: x = 0");
    if (!(h > 0.0)) throw DomainError("dunkl_laplacian_fd: step must be positive");
    const auto fp = f(x + h), fm = f(x - h), f0 = f(x), fr = f(-x);
    const auto d1 = (fp - fm) / (2.0 * h);
    const auto d2 = (fp - 2.0 * f0 + fm) / (h * h);
    return d2 + (2.0 * k / x) * d1 - k * (f0 - fr) / (x * x);
}

namespace {

transform::Profile propagated_spectrum(const DeformParams& params,
                                       const transform::Profile& u0, double t,
                                       const quad::QuadSpec& spec) {
    if (!(t >= 0.0)) throw DomainError("heat: time must be nonnegative");
    auto Fu0 = std::make_shared<transform::TransformEvaluable>(params, u0, spec);
    const int n = params.n;
    transform::Profile G([Fu0, n, t](double xi) -> std::complex<double> {
        const double mult = std::exp(-double(n) * t *
                                     std::pow(std::abs(xi), 2.0 / n));
        return mult * (*Fu0)(xi);
    });
    double rate = t;
    if (u0.decay_rate && *u0.decay_rate > 0.0) rate += 0.25 / *u0.decay_rate;
    if (rate > 0.0) G.decay_rate = rate;
    return G;
}

} // namespace

HeatState heat_propagate(const DeformParams& params,
                         const transform::Profile& u0, double t,
                         std::vector<double> xs, const quad::QuadSpec& spec) {
    auto G = propagated_spectrum(params, u0, t, spec);
    auto res = transform::inverse(params, G, std::move(xs), spec);
    if (res.any_failure)
        throw ConvergenceError("heat_propagate: " + res.messages.front());
    return HeatState{t, std::move(res.grid), params};
}

transform::Profile heat_solution_profile(const DeformParams& params,
                                         const transform::Profile& u0, double t,
                                         const quad::QuadSpec& spec) {
    // sample u(t, ±s^n) on a uniform s grid and spline per sign; smooth in s
    // even where |x|^{2/n} has a kink at 0
    const int n = params.n;
    double rate = 0.0;
    if (u0.decay_rate && *u0.decay_rate > 0.0)
        rate = 1.0 / (4.0 * (t + 1.0 / (4.0 * *u0.decay_rate)));
    double smax = spec.truncation_radius;
    if (rate > 0.0)
        smax = std::min(smax, std::sqrt(40.0 / (n * rate)) + 1.0);

    const int count = 601;
    const double ds = smax / (count - 1);
    std::vector<double> xs;
    xs.reserve(2 * count - 1);
    for (int i = count - 1; i >= 1; --i) xs.push_back(-std::pow(i * ds, n));
    xs.push_back(0.0);
    for (int i = 1; i < count; ++i) xs.push_back(std::pow(i * ds, n));

    HeatState st = heat_propagate(params, u0, t, xs, spec);

    std::vector<std::complex<double>> plus(count), minus(count);
    for (int i = 0; i < count; ++i) {
        minus[i] = st.grid.values[count - 1 - i]; // u(-(i ds)^n)
        plus[i] = st.grid.values[count - 1 + i];  // u(+(i ds)^n)
    }
    auto sp = std::make_shared<UniformSpline>(0.0, ds, std::move(plus));
    auto sm = std::make_shared<UniformSpline>(0.0, ds, std::move(minus));

    transform::Profile out([sp, sm, n](double x) -> std::complex<double> {
        const double s = std::pow(std::abs(x), 1.0 / n);
        return x >= 0.0 ? (*sp)(s) : (*sm)(s);
    });
    if (rate > 0.0) out.decay_rate = rate;
    return out;
}

double heat_residual(const DeformParams& params,
                     const std::function<std::complex<double>(double, double)>& u,
                     const std::vector<std::pair<double, double>>& probes,
                     double h_t, double h_x) {
    if (!(h_t > 0.0) || !(h_x > 0.0))
        throw DomainError("heat_residual: steps must be positive");
    const int n = params.n;
    double worst = 0.0;
    for (auto [t, x] : probes) {
        check_probe(x);
        auto slice = [&](double xx) { return u(t, xx); };
        const auto lap = dunkl_laplacian_fd(params.k, slice, x, h_x);
        const auto ut = (u(t + h_t, x) - u(t - h_t, x)) / (2.0 * h_t);
        const auto r =
            double(n) * std::pow(std::abs(x), 2.0 - 2.0 / n) * lap - ut;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double heat_residual(const DeformParams& params, const HeatState& prev,
                     const HeatState& mid, const HeatState& next) {
    const auto& pts = mid.grid.points;
    if (prev.grid.points != pts || next.grid.points != pts)
        throw DomainError("heat_residual: slices must share one grid");
    const double ht1 = mid.time - prev.time, ht2 = next.time - mid.time;
    if (!(ht1 > 0.0) || std::abs(ht1 - ht2) > 1e-12 * std::max(ht1, ht2))
        throw DomainError("heat_residual: slices must be equally spaced in t");
    const std::size_t m = pts.size();
    if (m < 3) throw DomainError("heat_residual: grid too small");
    const double dx = pts[1] - pts[0];
    for (std::size_t i = 1; i + 1 < m; ++i)
        if (std::abs((pts[i + 1] - pts[i]) - dx) > 1e-9 * dx)
            throw DomainError("heat_residual: grid must be uniform");

    const int n = params.n;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        const double x = pts[i];
        if (std::abs(x) < 0.05) continue;
        // reflection index: grid must be symmetric for the difference term
        const double xr = -x;
        const double fidx = (xr - pts[0]) / dx;
        const auto j = std::size_t(std::llround(fidx));
        if (j >= m || std::abs(pts[j] - xr) > 1e-9 * std::max(1.0, std::abs(xr)))
            throw DomainError("heat_residual: grid must be symmetric about 0");
        const auto& um = mid.grid.values;
        const auto d1 = (um[i + 1] - um[i - 1]) / (2.0 * dx);
        const auto d2 = (um[i + 1] - 2.0 * um[i] + um[i - 1]) / (dx * dx);
        const auto lap =
            d2 + (2.0 * params.k / x) * d1 - params.k * (um[i] - um[j]) / (x * x);
        const auto ut =
            (next.grid.values[i] - prev.grid.values[i]) / (ht1 + ht2);
        const auto r = double(n) * std::pow(std::abs(x), 2.0 - 2.0 / n) * lap - ut;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

DifferentiableProfile with_fd_laplacian(const DeformParams& params,
                                        transform::Profile f, double h) {
    auto fn = f.fn;
    const double k = params.k;
    return DifferentiableProfile{
        std::move(f),
        [fn, k, h](double x) { return dunkl_laplacian_fd(k, fn, x, h); }};
}

double symbol_defect(const DeformParams& params, const DifferentiableProfile& f,
                     const std::vector<double>& lambdas,
                     const quad::QuadSpec& spec) {
    if (!(params.weight_exponent > 0.0))
        throw ParamError(
            "symbol_defect: requires 2k + 2/n - 2 > 0 for the symbol identity");
    const int n = params.n;
    auto dunkl = f.dunkl;
    transform::Profile weighted([dunkl, n](double x) -> std::complex<double> {
        return std::pow(std::abs(x), 2.0 - 2.0 / n) * dunkl(x);
    });
    weighted.decay_rate = f.profile.decay_rate;
    weighted.support_radius = f.profile.support_radius;

    auto lhs = transform::forward(params, weighted, lambdas, spec);
    auto rhs = transform::forward(params, f.profile, lambdas, spec);
    if (lhs.any_failure || rhs.any_failure)
        throw ConvergenceError("symbol_defect: transform failed");
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.grid.size(); ++i) {
        const double lam = lhs.grid.points[i];
        const auto d = lhs.grid.values[i] +
                       std::pow(std::abs(lam), 2.0 / n) * rhs.grid.values[i];
        worst = std::max(worst, std::abs(d));
    }
    return worst;
}

quad::GridFunction convolve_spectral(const DeformParams& params,
                                     const transform::Profile& f,
                                     const transform::Profile& g,
                                     std::vector<double> xs,
                                     const quad::QuadSpec& spec) {
    auto Ff = std::make_shared<transform::TransformEvaluable>(params, f, spec);
    auto Fg = std::make_shared<transform::TransformEvaluable>(params, g, spec);
    transform::Profile H([Ff, Fg](double xi) { return (*Ff)(xi) * (*Fg)(xi); });
    double rate = 0.0;
    if (f.decay_rate && *f.decay_rate > 0.0) rate += 0.25 / *f.decay_rate;
    if (g.decay_rate && *g.decay_rate > 0.0) rate += 0.25 / *g.decay_rate;
    if (rate > 0.0) H.decay_rate = rate;
    auto res = transform::inverse(params, H, std::move(xs), spec);
    if (res.any_failure)
        throw ConvergenceError("convolve_spectral: " + res.messages.front());
    return std::move(res.grid);
}

DynamicalHardyReport dynamical_hardy_check(const DeformParams& params,
                                           const transform::Profile& u0,
                                           double T,
                                           const quad::QuadSpec& spec) {
    if (!(T > 0.0)) throw DomainError("dynamical_hardy_check: T must be positive");
    DynamicalHardyReport rep;
    rep.T = T;
    rep.threshold = 1.0 / (4.0 * T);

    auto norm2 = quad::integrate_weighted(
        [&](double x) {
            return std::complex<double>(std::norm(u0.fn(x)), 0.0);
        },
        params, spec);
    rep.u0_norm = std::sqrt(std::max(norm2.value.real(), 0.0));
    if (rep.u0_norm <= 1e-10) {
        rep.verdict = DynamicalHardyReport::Verdict::ZeroSolution;
        return rep;
    }

    std::vector<double> grid;
    const int per_sign = 64;
    for (int i = 0; i < per_sign; ++i) {
        const double x = 0.25 * std::pow(100.0, double(i) / (per_sign - 1));
        grid.push_back(x);
        grid.push_back(-x);
    }
    std::sort(grid.begin(), grid.end());
    HeatState uT = heat_propagate(params, u0, T, grid, spec);

    double peak = 0.0;
    for (const auto& v : uT.grid.values) peak = std::max(peak, std::abs(v));
    rep.envelope = audit::fit_envelope(uT.grid, params.n, 1e-12 * peak);
    rep.delta_est = rep.envelope.rate;
    rep.verdict = rep.delta_est < rep.threshold
                      ? DynamicalHardyReport::Verdict::Consistent
                      : DynamicalHardyReport::Verdict::Contradiction;
    return rep;
}

} // namespace gft::heat
