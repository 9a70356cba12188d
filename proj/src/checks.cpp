#include "gft/checks.hpp"

#include <cmath>

#include "gft/functions.hpp"
#include "gft/heat.hpp"
#include "gft/specfun.hpp"
#include "gft/transform.hpp"

namespace gft::checks {

bool SuiteReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

bool SuiteReport::any_warning() const {
    for (const auto& r : results)
        if (r.warned) return true;
    return false;
}

namespace {

CheckResult make(const std::string& name, double measured, double threshold,
                 bool warned = false) {
    return {name, measured, threshold, measured <= threshold, warned};
}

} // namespace

SuiteReport run_identity_suite(const DeformParams& params,
                               const quad::QuadSpec& spec) {
    SuiteReport rep;
    const int n = params.n;
    auto gauss = functions::deformed_gaussian(params, 0.5);
    auto oddg = functions::parse_function("oddgauss", params);

    // spectral identity against the closed form
    {
        std::vector<double> lambdas = {-4.0, -1.5, -0.4, 0.0, 0.7, 2.2, 5.0};
        auto res = transform::forward(params, gauss.profile, lambdas, spec);
        double worst = 0.0;
        bool warned = res.any_warning || res.any_failure;
        for (std::size_t i = 0; i < res.grid.size(); ++i) {
            const double lam = res.grid.points[i];
            const double want =
                std::pow(2.0 * 0.5, -(params.alpha + 1.0)) *
                std::exp(-(n / (4.0 * 0.5)) * std::pow(std::abs(lam), 2.0 / n));
            worst = std::max(worst, std::abs(res.grid.values[i] - want) /
                                        std::abs(want));
        }
        rep.results.push_back(make("spectral_identity", worst, 1e-6, warned));
    }

    // Plancherel
    {
        const double defect =
            transform::plancherel_defect(params, gauss.profile, spec);
        rep.results.push_back(make("plancherel", defect, 1e-5));
    }

    // inversion round trip at a few points
    {
        transform::TransformEvaluable F(params, gauss.profile, spec);
        transform::Profile Fp([F](double lam) { return F(lam); },
                              1.0 / (4.0 * 0.5));
        std::vector<double> xs = {0.3, 1.1, 2.4};
        auto back = transform::inverse(params, Fp, xs, spec);
        double worst = 0.0;
        for (std::size_t i = 0; i < back.grid.size(); ++i)
            worst = std::max(worst,
                             std::abs(back.grid.values[i] -
                                      gauss.profile.fn(back.grid.points[i])));
        rep.results.push_back(
            make("inversion_round_trip", worst,
                 1e-5 * (1.0 + 1.0), back.any_warning || back.any_failure));
    }

    // split identity T1 + T2 = F at x^n
    {
        double worst = 0.0;
        for (const auto& f : {gauss, oddg}) {
            std::vector<std::complex<double>> zs = {
                {0.5, 0.0}, {1.5, 0.0}, {2.5, 0.0}};
            auto v1 = transform::t1(params, f.profile, zs, spec);
            auto v2 = transform::t2(params, f.profile, zs, spec);
            for (std::size_t i = 0; i < zs.size(); ++i) {
                const double x = zs[i].real();
                auto fwd = transform::forward(params, f.profile,
                                              {std::pow(x, n)}, spec);
                worst = std::max(worst, std::abs(v1[i] + v2[i] -
                                                 fwd.grid.values[0]));
            }
        }
        rep.results.push_back(make("split_identity", worst, 1e-8));
    }

    // Poisson oracle for the even kernel factor
    {
        double worst = 0.0;
        for (double alpha : {params.alpha, params.alpha + n}) {
            if (!(alpha > -0.5)) continue;
            specfun::BesselOrder order(alpha);
            for (double x : {2.0, 10.0, 37.0}) {
                const double o = specfun::bessel_poisson_oracle(order, x);
                const double s = specfun::bessel_normalized(order, x);
                worst = std::max(worst,
                                 std::abs(o - s) / std::max(1.0, std::abs(s)));
            }
        }
        rep.results.push_back(make("bessel_poisson_oracle", worst, 1e-8));
    }

    // Gegenbauer-Poisson oracle for the odd kernel factor (needs alpha > 0)
    if (params.alpha > 0.0) {
        double worst = 0.0;
        specfun::BesselOrder shifted(params.alpha + n);
        for (double u : {3.0, 22.0}) {
            const double o =
                specfun::gegenbauer_poisson_oracle(params.alpha, n, u);
            const double s = std::pow(u, n) *
                             specfun::bessel_normalized(shifted, u);
            worst = std::max(
                worst, std::abs(o - s) / std::max(1.0, std::pow(u, n)));
        }
        rep.results.push_back(make("gegenbauer_poisson_oracle", worst, 1e-8));
    }

    // symbol identity (needs a positive weight exponent)
    if (params.weight_exponent > 0.0) {
        auto df = functions::differentiable(gauss, params);
        const double defect =
            heat::symbol_defect(params, df, {0.5, 1.7}, spec);
        rep.results.push_back(make("symbol_identity", defect, 1e-5));
    }

    return rep;
}

} // namespace gft::checks
