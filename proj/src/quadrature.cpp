#include "gft/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

namespace gft::quad {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

void QuadSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw DomainError("QuadSpec: tolerances must be positive");
    if (panel_order < 2) throw DomainError("QuadSpec: panel_order must be >= 2");
    if (!(truncation_radius > 0.0))
        throw DomainError("QuadSpec: truncation_radius must be positive");
    if (max_subdivisions < 1)
        throw DomainError("QuadSpec: max_subdivisions must be >= 1");
}

GridFunction::GridFunction(std::vector<double> pts,
                           std::vector<std::complex<double>> vals, Provenance tag)
    : points(std::move(pts)), values(std::move(vals)), provenance(tag) {
    if (points.size() != values.size())
        throw DomainError("GridFunction: points/values length mismatch");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i]))
            throw DomainError("GridFunction: non-finite sample point");
        if (i > 0 && !(points[i] > points[i - 1]))
            throw DomainError("GridFunction: points must be strictly increasing");
        if (std::isnan(values[i].real()) || std::isnan(values[i].imag()))
            throw DomainError("GridFunction: NaN sample value");
    }
}

const GaussRule& gauss_rule(int order) {
    if (order < 1) throw DomainError("gauss_rule: order must be >= 1");
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    GaussRule r;
    r.nodes.assign(order, 0.0);
    r.weights.assign(order, 0.0);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        r.nodes[i] = -z;
        r.nodes[order - 1 - i] = z;
        r.weights[i] = r.weights[order - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return cache.emplace(order, std::move(r)).first->second;
}

namespace {

struct Panel {
    double a, b;
    std::complex<double> hi;
    double err;
};

Panel eval_panel(const RealToComplex& f, double a, double b, const GaussRule& rh,
                 const GaussRule& rl) {
    const double c = 0.5 * (a + b), d = 0.5 * (b - a);
    std::complex<double> hi{0.0, 0.0}, lo{0.0, 0.0};
    for (std::size_t i = 0; i < rh.nodes.size(); ++i)
        hi += rh.weights[i] * f(c + d * rh.nodes[i]);
    for (std::size_t i = 0; i < rl.nodes.size(); ++i)
        lo += rl.weights[i] * f(c + d * rl.nodes[i]);
    hi *= d;
    lo *= d;
    return {a, b, hi, std::abs(hi - lo)};
}

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.err != y.err) return x.err > y.err;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

} // namespace

QuadResult integrate_adaptive(const RealToComplex& f, double a, double b,
                              const QuadSpec& spec, double max_panel_width) {
    spec.validate();
    QuadResult res;
    if (!(b > a)) return res;

    const GaussRule& rh = gauss_rule(spec.panel_order);
    const GaussRule& rl = gauss_rule(std::max(2, (spec.panel_order + 1) / 2));

    int initial = 1;
    if (max_panel_width > 0.0) {
        while (initial < spec.max_subdivisions &&
               (b - a) / initial > max_panel_width)
            initial *= 2;
    }

    std::multiset<Panel, PanelOrder> panels;
    std::complex<double> total{0.0, 0.0};
    double errsum = 0.0;
    for (int i = 0; i < initial; ++i) {
        Panel p = eval_panel(f, a + (b - a) * i / initial,
                             a + (b - a) * (i + 1) / initial, rh, rl);
        total += p.hi;
        errsum += p.err;
        panels.insert(p);
    }

    auto tol = [&] {
        return std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    };
    while (errsum > tol() && int(panels.size()) < spec.max_subdivisions) {
        Panel worst = *panels.begin();
        panels.erase(panels.begin());
        total -= worst.hi;
        errsum -= worst.err;
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) {
            // interval at floating-point resolution; keep as is
            total += worst.hi;
            panels.insert(Panel{worst.a, worst.b, worst.hi, 0.0});
            continue;
        }
        for (Panel p : {eval_panel(f, worst.a, m, rh, rl),
                        eval_panel(f, m, worst.b, rh, rl)}) {
            total += p.hi;
            errsum += p.err;
            panels.insert(p);
        }
    }
    if (errsum > tol())
        throw ConvergenceError("integrate_adaptive: subdivision cap reached");
    res.value = total;
    res.err_est = errsum;
    res.panels_used = int(panels.size());
    return res;
}

QuadResult tanh_sinh(const EndpointAware& f, double a, double b, double tol,
                     int max_level) {
    QuadResult res;
    if (!(b > a)) return res;
    const double d = 0.5 * (b - a);
    const double umax = 6.9;

    // term at abscissa u: f evaluated at x = c + d tanh(w), w = (pi/2) sinh u,
    // with exact distances to both endpoints, times the DE jacobian.
    auto term = [&](double u) -> std::complex<double> {
        const double w = 0.5 * kPi * std::sinh(u);
        const double aw = std::abs(w);
        if (aw > 350.0) return {0.0, 0.0};
        const double em2 = std::exp(-2.0 * aw);
        const double opem2 = 1.0 + em2;
        const double dnear = 2.0 * d * em2 / opem2;  // distance to nearer endpoint
        const double dfar = 2.0 * d / opem2;
        const double jac = d * kPi * std::cosh(u) * em2 / (opem2 * opem2) * 2.0;
        if (jac == 0.0 || dnear == 0.0) return {0.0, 0.0};
        double dl, dr, x;
        if (w >= 0.0) {
            dl = dfar;
            dr = dnear;
            x = b - dnear;
        } else {
            dl = dnear;
            dr = dfar;
            x = a + dnear;
        }
        return f(x, dl, dr) * jac;
    };

    double h = 1.0;
    std::complex<double> total = term(0.0);
    {
        int j = 1;
        while (j * h <= umax) {
            total += term(j * h) + term(-j * h);
            ++j;
        }
        total *= h;
    }
    std::complex<double> prev = total;
    res.err_est = std::abs(total);
    for (int level = 1; level <= max_level; ++level) {
        std::complex<double> s{0.0, 0.0};
        for (double u = h / 2.0; u <= umax; u += h)
            s += term(u) + term(-u);
        total = total / 2.0 + (h / 2.0) * s;
        h /= 2.0;
        res.err_est = std::abs(total - prev);
        prev = total;
        if (level >= 4 && res.err_est <= tol * std::max(1.0, std::abs(total)))
            break;
    }
    res.value = total;
    return res;
}

QuadResult integrate_halfline(const RealToComplex& f, double weight_exponent,
                              const QuadSpec& spec) {
    spec.validate();
    if (!(weight_exponent > -1.0))
        throw DomainError("integrate_halfline: weight exponent must be > -1");
    const double R = spec.truncation_radius;
    const double s0 = std::min(1.0, 0.5 * R);

    // origin panel via tanh-sinh: s^w may be singular or have unbounded
    // derivatives at 0
    auto head = tanh_sinh(
        [&](double s, double dl, double) -> std::complex<double> {
            return f(s) * std::pow(dl, weight_exponent);
        },
        0.0, s0, std::min(1e-13, spec.rel_tol), 11);

    auto weighted = [&](double s) -> std::complex<double> {
        return f(s) * std::pow(s, weight_exponent);
    };
    QuadResult body;
    if (R > s0) body = integrate_adaptive(weighted, s0, R, spec);

    QuadResult res;
    res.value = head.value + body.value;
    res.err_est = head.err_est + body.err_est;
    res.panels_used = body.panels_used;

    // tail heuristic: one high-order pass over the last stretch before R
    const double d = std::min(1.0, 0.1 * R);
    const GaussRule& rh = gauss_rule(spec.panel_order);
    std::complex<double> tail{0.0, 0.0};
    for (std::size_t i = 0; i < rh.nodes.size(); ++i)
        tail += rh.weights[i] * weighted(R - d + 0.5 * d * (rh.nodes[i] + 1.0));
    tail *= 0.5 * d;
    res.truncation_warning =
        std::abs(tail) > 10.0 * std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value));
    return res;
}

QuadResult integrate_weighted(const RealToComplex& f, const DeformParams& params,
                              const QuadSpec& spec) {
    const int n = params.n;
    auto plus = integrate_halfline(
        [&](double s) { return f(std::pow(s, n)); }, params.substituted_exponent,
        spec);
    auto minus = integrate_halfline(
        [&](double s) { return f(-std::pow(s, n)); }, params.substituted_exponent,
        spec);
    const double c = params.measure_const * n;
    QuadResult res;
    res.value = c * (plus.value + minus.value);
    res.err_est = c * (plus.err_est + minus.err_est);
    res.truncation_warning = plus.truncation_warning || minus.truncation_warning;
    res.panels_used = plus.panels_used + minus.panels_used;
    return res;
}

} // namespace gft::quad
