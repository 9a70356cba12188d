#include "gft/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <set>
#include <unordered_map>

namespace gft::transform {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLogBudget = 37.0; // ln(1/abs_tol) headroom for radii
} // namespace

namespace detail {

// Dyadic cell (depth, index) of [0, R_root]: [R idx / 2^d, R (idx+1) / 2^d].
struct CellKey {
    int depth;
    std::int64_t idx;
    bool operator==(const CellKey& o) const {
        return depth == o.depth && idx == o.idx;
    }
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        return std::hash<std::int64_t>()((std::int64_t(k.depth) << 48) ^ k.idx);
    }
};

// Profile samples on one cell at the high- and low-order Gauss nodes:
// A = (g(s^n) + g(-s^n)) s^{2α+1},  B = (g(s^n) - g(-s^n)) s^{2α+1} s^n.
struct CellData {
    std::vector<double> s_hi, s_lo;
    std::vector<std::complex<double>> a_hi, a_lo, b_hi, b_lo;
    std::vector<double> w_hi, w_lo; // Gauss weights scaled by half-width
};

enum class Mode { Kernel, Even, Odd };

class Engine {
  public:
    Engine(const DeformParams& params, Profile profile, quad::QuadSpec spec)
        : params_(params), profile_(std::move(profile)), spec_(spec) {
        spec_.validate();
        if (!profile_.fn) throw DomainError("transform: empty profile");
        bessel_opts_ = kernel_bessel_options();
        even_order_ = specfun::BesselOrder(params_.alpha);
        odd_order_ = specfun::BesselOrder(params_.alpha + params_.n);
    }

    PointValue eval(Mode mode, std::complex<double> point) {
        std::lock_guard<std::mutex> lock(mu_);
        return eval_locked(mode, point);
    }

    const DeformParams& params() const { return params_; }

  private:
    struct Active {
        CellKey key;
        double s_lo;
        std::complex<double> va, vb;
        double err;
    };

    struct ActiveOrder {
        bool operator()(const Active& x, const Active& y) const {
            if (x.err != y.err) return x.err > y.err;
            if (x.s_lo != y.s_lo) return x.s_lo < y.s_lo;
            return x.key.depth < y.key.depth;
        }
    };

    PointValue eval_locked(Mode mode, std::complex<double> point) {
        const int n = params_.n;
        const double imz = std::abs(point.imag());
        const double radius = point_radius(imz);

        // oscillation frequency in s, and the spec's panel-width guard
        double freq;
        if (mode == Mode::Kernel)
            freq = n * std::pow(std::abs(point.real()), 1.0 / n);
        else
            freq = n * std::abs(point);
        const double cap = std::min(1.0, kPi / (4.0 * std::max(freq, 1e-30)));

        if (mode != Mode::Kernel && point.imag() != 0.0) {
            const double max_arg = n * std::abs(point) * (radius + 1.0);
            if (max_arg > bessel_opts_.max_complex_arg)
                throw DomainError(
                    "transform: complex-argument radius of the Bessel series "
                    "would be exceeded");
        }

        const double R = spec_.truncation_radius;
        int depth = 0;
        while (R / std::exp2(depth) > cap && (std::int64_t(1) << depth) <
                                                 spec_.max_subdivisions)
            ++depth;
        const std::int64_t ncells = std::min<std::int64_t>(
            std::int64_t(1) << depth,
            std::int64_t(std::ceil(radius / (R / std::exp2(depth)))));

        std::multiset<Active, ActiveOrder> act;
        std::complex<double> va_tot{0, 0}, vb_tot{0, 0};
        double errsum = 0.0;
        double stuck = 0.0;
        for (std::int64_t i = 0; i < ncells; ++i) {
            Active a = eval_cell(mode, point, {depth, i});
            va_tot += a.va;
            vb_tot += a.vb;
            errsum += a.err;
            act.insert(a);
        }

        const double mc = params_.measure_const * n;
        auto combine = [&](std::complex<double> va, std::complex<double> vb) {
            switch (mode) {
            case Mode::Kernel:
                return mc * (va + params_.odd_kernel_const * point.real() * vb);
            case Mode::Even:
                return mc * va;
            case Mode::Odd: {
                std::complex<double> zn{1.0, 0.0};
                for (int i = 0; i < n; ++i) zn *= point;
                return mc * params_.odd_kernel_const * zn * vb;
            }
            }
            return std::complex<double>{};
        };
        // cell errors already carry the mode's odd-part scale; mc puts them in
        // the units of the combined value
        auto tol = [&] {
            return std::max(spec_.abs_tol,
                            spec_.rel_tol * std::abs(combine(va_tot, vb_tot)));
        };

        while (mc * errsum > tol() &&
               std::int64_t(act.size()) < spec_.max_subdivisions) {
            Active worst = *act.begin();
            act.erase(act.begin());
            va_tot -= worst.va;
            vb_tot -= worst.vb;
            errsum -= worst.err;
            if (worst.key.depth >= 40) {
                stuck += worst.err;
                worst.err = 0.0;
                va_tot += worst.va;
                vb_tot += worst.vb;
                act.insert(worst);
                continue;
            }
            for (std::int64_t c : {2 * worst.key.idx, 2 * worst.key.idx + 1}) {
                Active a = eval_cell(mode, point, {worst.key.depth + 1, c});
                va_tot += a.va;
                vb_tot += a.vb;
                errsum += a.err;
                act.insert(a);
            }
        }
        if (mc * errsum > tol())
            throw ConvergenceError("transform: subdivision cap reached");

        PointValue pv;
        pv.value = combine(va_tot, vb_tot);
        pv.err_est = mc * (errsum + stuck);
        // truncation check: the outermost cell must already be negligible
        const Active* outer = nullptr;
        for (const Active& a : act)
            if (!outer || a.s_lo > outer->s_lo) outer = &a;
        if (outer) {
            const double outer_mag =
                std::abs(combine(outer->va, outer->vb));
            pv.warning = outer_mag > 10.0 * tol();
        }
        return pv;
    }

    double point_radius(double imz) const {
        double R = spec_.truncation_radius;
        if (profile_.support_radius)
            R = std::min(R, std::pow(*profile_.support_radius,
                                     1.0 / params_.n) + 0.1);
        if (profile_.decay_rate && *profile_.decay_rate > 0.0) {
            const double a = *profile_.decay_rate;
            const double L =
                std::max(kLogBudget, std::log(1.0 / spec_.abs_tol));
            const double s =
                (imz + std::sqrt(imz * imz + 4.0 * a * L / params_.n)) /
                (2.0 * a);
            R = std::min(R, s + 0.5);
        }
        return std::max(R, 1e-6);
    }

    Active eval_cell(Mode mode, std::complex<double> point, CellKey key) {
        const CellData& cd = cell_data(key);
        std::complex<double> va_hi{0, 0}, vb_hi{0, 0}, va_lo{0, 0}, vb_lo{0, 0};

        auto accumulate = [&](const std::vector<double>& s,
                              const std::vector<double>& w,
                              const std::vector<std::complex<double>>& A,
                              const std::vector<std::complex<double>>& B,
                              std::complex<double>& va,
                              std::complex<double>& vb) {
            const int n = params_.n;
            for (std::size_t i = 0; i < s.size(); ++i) {
                switch (mode) {
                case Mode::Kernel: {
                    const double arg =
                        n * std::pow(std::abs(point.real()), 1.0 / n) * s[i];
                    va += w[i] * A[i] *
                          specfun::bessel_normalized(even_order_, arg,
                                                     bessel_opts_);
                    vb += w[i] * B[i] *
                          specfun::bessel_normalized(odd_order_, arg,
                                                     bessel_opts_);
                    break;
                }
                case Mode::Even: {
                    const std::complex<double> arg = double(n) * point * s[i];
                    va += w[i] * A[i] *
                          specfun::bessel_normalized(even_order_, arg,
                                                     bessel_opts_);
                    break;
                }
                case Mode::Odd: {
                    const std::complex<double> arg = double(n) * point * s[i];
                    vb += w[i] * B[i] *
                          specfun::bessel_normalized(odd_order_, arg,
                                                     bessel_opts_);
                    break;
                }
                }
            }
        };
        accumulate(cd.s_hi, cd.w_hi, cd.a_hi, cd.b_hi, va_hi, vb_hi);
        accumulate(cd.s_lo, cd.w_lo, cd.a_lo, cd.b_lo, va_lo, vb_lo);

        Active a;
        a.key = key;
        a.s_lo = spec_.truncation_radius * double(key.idx) / std::exp2(key.depth);
        a.va = va_hi;
        a.vb = vb_hi;
        double oddscale = std::abs(params_.odd_kernel_const);
        if (mode == Mode::Kernel) {
            oddscale *= std::abs(point.real());
        } else if (mode == Mode::Odd) {
            oddscale *= std::pow(std::abs(point), double(params_.n));
        }
        a.err = std::abs(va_hi - va_lo) + oddscale * std::abs(vb_hi - vb_lo);
        return a;
    }

    const CellData& cell_data(CellKey key) {
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;

        const double R = spec_.truncation_radius;
        const double w = R / std::exp2(key.depth);
        const double a = w * double(key.idx);
        const double b = a + w;
        const auto& rh = quad::gauss_rule(spec_.panel_order);
        const auto& rl =
            quad::gauss_rule(std::max(2, (spec_.panel_order + 1) / 2));

        CellData cd;
        auto fill = [&](const quad::GaussRule& r, std::vector<double>& sv,
                        std::vector<double>& wv,
                        std::vector<std::complex<double>>& av,
                        std::vector<std::complex<double>>& bv) {
            const double c = 0.5 * (a + b), d = 0.5 * (b - a);
            sv.resize(r.nodes.size());
            wv.resize(r.nodes.size());
            av.resize(r.nodes.size());
            bv.resize(r.nodes.size());
            for (std::size_t i = 0; i < r.nodes.size(); ++i) {
                const double s = c + d * r.nodes[i];
                const double x = std::pow(s, params_.n);
                const std::complex<double> gp = profile_.fn(x);
                const std::complex<double> gm = profile_.fn(-x);
                const double wgt = std::pow(s, params_.substituted_exponent);
                sv[i] = s;
                wv[i] = d * r.weights[i];
                av[i] = (gp + gm) * wgt;
                bv[i] = (gp - gm) * wgt * x;
            }
        };
        fill(rh, cd.s_hi, cd.w_hi, cd.a_hi, cd.b_hi);
        fill(rl, cd.s_lo, cd.w_lo, cd.a_lo, cd.b_lo);
        return cache_.emplace(key, std::move(cd)).first->second;
    }

    DeformParams params_;
    Profile profile_;
    quad::QuadSpec spec_;
    specfun::BesselOptions bessel_opts_;
    specfun::BesselOrder even_order_{0.0};
    specfun::BesselOrder odd_order_{0.0};
    std::unordered_map<CellKey, CellData, CellKeyHash> cache_;
    std::mutex mu_;
};

} // namespace detail

TransformEvaluable::TransformEvaluable(const DeformParams& params, Profile f,
                                       quad::QuadSpec spec)
    : impl_(std::make_shared<detail::Engine>(params, std::move(f), spec)) {}

PointValue TransformEvaluable::at(double lambda) const {
    try {
        return impl_->eval(detail::Mode::Kernel, {lambda, 0.0});
    } catch (const Error& e) {
        PointValue pv;
        pv.failed = true;
        pv.message = e.what();
        return pv;
    }
}

std::complex<double> TransformEvaluable::operator()(double lambda) const {
    return impl_->eval(detail::Mode::Kernel, {lambda, 0.0}).value;
}

const DeformParams& TransformEvaluable::params() const {
    return impl_->params();
}

namespace {

std::vector<double> sorted_unique(std::vector<double> v) {
    for (double x : v)
        if (!std::isfinite(x))
            throw DomainError("transform: non-finite evaluation point");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

TransformResult run_batch(const DeformParams& params, const Profile& f,
                          std::vector<double> points, const quad::QuadSpec& spec,
                          bool reflect) {
    auto engine = std::make_shared<detail::Engine>(params, f, spec);
    points = sorted_unique(points);

    std::vector<std::complex<double>> values(points.size());
    std::vector<double> errs(points.size());
    TransformResult out;
    out.params = params;
    const double sign = (reflect && params.n % 2 == 1) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        try {
            PointValue pv =
                engine->eval(detail::Mode::Kernel, {sign * points[i], 0.0});
            values[i] = pv.value;
            errs[i] = pv.err_est;
            if (pv.warning) {
                out.any_warning = true;
                out.messages.push_back("truncation not certified at point " +
                                       std::to_string(points[i]));
            }
        } catch (const Error& e) {
            values[i] = {0.0, 0.0};
            errs[i] = std::numeric_limits<double>::infinity();
            out.any_failure = true;
            out.messages.push_back("point " + std::to_string(points[i]) +
                                   " failed: " + e.what());
        }
    }
    out.grid = quad::GridFunction(std::move(points), std::move(values),
                                  quad::Provenance::Transformed);
    out.err_estimates = std::move(errs);
    return out;
}

} // namespace

TransformResult forward(const DeformParams& params, const Profile& f,
                        std::vector<double> lambdas,
                        const quad::QuadSpec& spec) {
    return run_batch(params, f, std::move(lambdas), spec, false);
}

TransformResult inverse(const DeformParams& params, const Profile& g,
                        std::vector<double> xs, const quad::QuadSpec& spec) {
    return run_batch(params, g, std::move(xs), spec, true);
}

std::vector<std::complex<double>> t1(const DeformParams& params,
                                     const Profile& f,
                                     const std::vector<std::complex<double>>& zs,
                                     const quad::QuadSpec& spec) {
    detail::Engine engine(params, f, spec);
    std::vector<std::complex<double>> out;
    out.reserve(zs.size());
    for (auto z : zs) out.push_back(engine.eval(detail::Mode::Even, z).value);
    return out;
}

std::vector<std::complex<double>> t2(const DeformParams& params,
                                     const Profile& f,
                                     const std::vector<std::complex<double>>& zs,
                                     const quad::QuadSpec& spec) {
    detail::Engine engine(params, f, spec);
    std::vector<std::complex<double>> out;
    out.reserve(zs.size());
    for (auto z : zs) out.push_back(engine.eval(detail::Mode::Odd, z).value);
    return out;
}

double plancherel_defect(const DeformParams& params, const Profile& f,
                         const quad::QuadSpec& spec) {
    auto abs2 = [&](double x) {
        const std::complex<double> v = f.fn(x);
        return std::complex<double>(std::norm(v), 0.0);
    };
    const auto nf2 = quad::integrate_weighted(abs2, params, spec);
    if (nf2.value.real() <= 10.0 * spec.abs_tol)
        throw DegenerateInput("plancherel_defect: f has zero norm");

    auto engine = std::make_shared<detail::Engine>(params, f, spec);
    auto F_at = [&](double lam) {
        return engine->eval(detail::Mode::Kernel, {lam, 0.0}).value;
    };

    // geometric presample of |Ff| picks the outer truncation radius
    const int n = params.n;
    const double smin = std::pow(0.05, 1.0 / n), smax = std::pow(60.0, 1.0 / n);
    double sigma_support = smin;
    double peak = 0.0;
    const int presamples = 25;
    std::vector<double> mags(presamples);
    for (int i = 0; i < presamples; ++i) {
        const double sigma =
            smin * std::pow(smax / smin, double(i) / (presamples - 1));
        const double lam = std::pow(sigma, n);
        const double m = std::max(std::abs(F_at(lam)), std::abs(F_at(-lam)));
        mags[i] = m;
        peak = std::max(peak, m);
        if (m * m > spec.abs_tol) sigma_support = sigma;
    }
    const double outer_radius = std::min(spec.truncation_radius,
                                         1.3 * sigma_support + 0.5);

    quad::QuadSpec outer_spec = spec;
    outer_spec.truncation_radius = outer_radius;
    auto outer = quad::integrate_halfline(
        [&](double sigma) -> std::complex<double> {
            const double lam = std::pow(sigma, n);
            return std::norm(F_at(lam)) + std::norm(F_at(-lam));
        },
        params.substituted_exponent, outer_spec);

    const double nF2 = params.measure_const * n * outer.value.real();
    const double a = std::sqrt(nf2.value.real());
    const double b = std::sqrt(std::max(nF2, 0.0));
    return std::abs(a - b) / a;
}

GrowthReport growth_bound_check(const DeformParams& params, const Profile& f,
                                const std::vector<std::complex<double>>& zs,
                                const quad::QuadSpec& spec) {
    if (!f.decay_rate || !(*f.decay_rate > 0.0))
        throw DomainError("growth_bound_check: profile must carry its envelope rate");
    const double a = *f.decay_rate;
    detail::Engine engine(params, f, spec);
    GrowthReport rep;
    rep.samples.reserve(zs.size());
    for (auto z : zs) {
        const double damp =
            std::exp(-(params.n / (4.0 * a)) * z.imag() * z.imag());
        GrowthSample gs;
        gs.z = z;
        gs.t1_ratio =
            std::abs(engine.eval(detail::Mode::Even, z).value) * damp;
        gs.t2_ratio =
            std::abs(engine.eval(detail::Mode::Odd, z).value) * damp;
        rep.max_t1_ratio = std::max(rep.max_t1_ratio, gs.t1_ratio);
        rep.max_t2_ratio = std::max(rep.max_t2_ratio, gs.t2_ratio);
        rep.samples.push_back(gs);
    }
    return rep;
}

} // namespace gft::transform
