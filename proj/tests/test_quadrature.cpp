#include <doctest.h>

#include <cmath>
#include <complex>

#include "gft/params.hpp"
#include "gft/quadrature.hpp"

using namespace gft;
using namespace gft::quad;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPiHalf = 0.8862269254527580136491; // sqrt(pi)/2
constexpr double kGamma25 = 1.329340388179137020474;     // Gamma(2.5)
} // namespace

TEST_CASE("Gauss rules integrate polynomials exactly") {
    const auto& r = gauss_rule(15);
    REQUIRE(r.nodes.size() == 15);
    double v = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        v += r.weights[i] * std::pow(r.nodes[i], 28);
    CHECK(v == doctest::Approx(2.0 / 29.0).epsilon(1e-13));
    // symmetry
    for (int i = 0; i < 7; ++i) CHECK(r.nodes[i] == -r.nodes[14 - i]);
}

TEST_CASE("GridFunction validation") {
    CHECK_THROWS_AS(GridFunction({1.0, 2.0}, {{1.0, 0.0}}, Provenance::Sampled),
                    DomainError);
    CHECK_THROWS_AS(
        GridFunction({1.0, 1.0}, {{1.0, 0.0}, {2.0, 0.0}}, Provenance::Sampled),
        DomainError);
    CHECK_THROWS_AS(GridFunction({0.0, 1.0},
                                 {{1.0, 0.0}, {std::nan(""), 0.0}},
                                 Provenance::Sampled),
                    DomainError);
    GridFunction ok({-1.0, 0.5}, {{1.0, 0.0}, {0.0, 2.0}}, Provenance::Analytic);
    CHECK(ok.size() == 2);
}

TEST_CASE("QuadSpec validation") {
    QuadSpec s;
    s.panel_order = 1;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = QuadSpec{};
    s.rel_tol = 0.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("adaptive panels: smooth and oscillatory") {
    QuadSpec spec;
    auto sinf = [](double x) { return std::complex<double>(std::sin(x), 0.0); };
    auto r = integrate_adaptive(sinf, 0.0, kPi, spec);
    CHECK(r.value.real() == doctest::Approx(2.0).epsilon(1e-13));

    auto osc = [](double x) { return std::complex<double>(std::cos(40.0 * x), 0.0); };
    auto r2 = integrate_adaptive(osc, 0.0, 10.0, spec, kPi / 160.0);
    CHECK(r2.value.real() ==
          doctest::Approx(std::sin(400.0) / 40.0).epsilon(1e-11));
}

TEST_CASE("adaptive panels: subdivision cap throws") {
    QuadSpec spec;
    spec.max_subdivisions = 6;
    auto f = [](double x) { return std::complex<double>(std::pow(x, -0.9), 0.0); };
    CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, spec), ConvergenceError);
}

TEST_CASE("tanh-sinh: endpoint singularities") {
    auto r = tanh_sinh(
        [](double, double, double dr) {
            return std::complex<double>(1.0 / std::sqrt(dr), 0.0);
        },
        0.0, 1.0);
    CHECK(r.value.real() == doctest::Approx(2.0).epsilon(1e-12));

    auto rlog = tanh_sinh(
        [](double, double dl, double) {
            return std::complex<double>(std::log(dl), 0.0);
        },
        0.0, 1.0);
    CHECK(rlog.value.real() == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("half-line integrals with power weights") {
    QuadSpec spec;
    auto g = [](double s) { return std::complex<double>(std::exp(-s * s), 0.0); };
    CHECK(integrate_halfline(g, 0.0, spec).value.real() ==
          doctest::Approx(kSqrtPiHalf).epsilon(1e-12));

    spec.truncation_radius = 40.0;
    auto e = [](double s) { return std::complex<double>(std::exp(-s), 0.0); };
    auto r = integrate_halfline(e, 1.5, spec);
    CHECK(r.value.real() == doctest::Approx(kGamma25).epsilon(1e-12));
    CHECK_FALSE(r.truncation_warning);

    auto one = [](double) { return std::complex<double>(1.0, 0.0); };
    CHECK(integrate_halfline(one, 0.0, spec).truncation_warning);

    CHECK_THROWS_AS(integrate_halfline(g, -1.0, spec), DomainError);
}

TEST_CASE("half-line linearity") {
    QuadSpec spec;
    auto f = [](double s) { return std::complex<double>(std::exp(-s * s), 0.0); };
    auto g = [](double s) {
        return std::complex<double>(0.0, std::exp(-2.0 * s * s));
    };
    auto combo = [&](double s) { return 2.0 * f(s) + 3.0 * g(s); };
    auto vc = integrate_halfline(combo, 0.7, spec).value;
    auto vf = integrate_halfline(f, 0.7, spec).value;
    auto vg = integrate_halfline(g, 0.7, spec).value;
    CHECK(std::abs(vc - (2.0 * vf + 3.0 * vg)) <= 1e-10 * std::abs(vc));
}

TEST_CASE("weighted measure integrals") {
    QuadSpec spec;
    // odd integrand vanishes
    {
        auto p = make_params(0.75, 2);
        auto odd = [](double x) {
            return std::complex<double>(x * std::exp(-x * x), 0.0);
        };
        CHECK(std::abs(integrate_weighted(odd, p, spec).value) <= 1e-12);
    }
    // deformed Gaussian mass: (2a)^{-(alpha+1)}
    struct Case {
        double k;
        int n;
        double a;
    };
    for (const auto& c : {Case{0.0, 1, 0.5}, Case{0.5, 2, 0.3},
                          Case{1.0, 3, 1.0}, Case{0.3, 1, 1.0},
                          Case{0.25, 2, 0.5}}) {
        auto p = make_params(c.k, c.n);
        auto f = [&](double x) {
            return std::complex<double>(
                std::exp(-c.n * c.a * std::pow(std::abs(x), 2.0 / c.n)), 0.0);
        };
        const double want = std::pow(2.0 * c.a, -(p.alpha + 1.0));
        const double got = integrate_weighted(f, p, spec).value.real();
        CHECK_MESSAGE(std::abs(got - want) <= 1e-10 * want, "k=", c.k,
                      " n=", c.n, " a=", c.a);
    }
    // classical normalized Gaussian has unit mass
    {
        auto p = make_params(0.0, 1);
        auto f = [](double x) {
            return std::complex<double>(std::exp(-0.5 * x * x), 0.0);
        };
        CHECK(integrate_weighted(f, p, spec).value.real() ==
              doctest::Approx(1.0).epsilon(1e-11));
    }
}

TEST_CASE("doubling the truncation radius is inert for decaying integrands") {
    auto p = make_params(0.6, 2);
    auto f = [](double x) {
        return std::complex<double>(std::exp(-2.0 * std::abs(x)), 0.0);
    };
    QuadSpec spec;
    spec.truncation_radius = 15.0;
    const auto v1 = integrate_weighted(f, p, spec).value;
    spec.truncation_radius = 30.0;
    const auto v2 = integrate_weighted(f, p, spec).value;
    CHECK(std::abs(v1 - v2) <= 10.0 * spec.abs_tol);
}

TEST_CASE("substitution consistency against direct weighted quadrature") {
    // smooth compactly supported profile, integrated both through x = s^n and
    // directly in x away from the origin
    auto p = make_params(0.75, 2);
    auto f = [](double x) -> std::complex<double> {
        if (std::abs(x) >= 2.0) return {0.0, 0.0};
        return std::exp(-4.0 / (4.0 - x * x));
    };
    QuadSpec spec;
    const auto subst = integrate_weighted(f, p, spec).value.real();

    auto direct_integrand = [&](double x) {
        return f(x) * std::pow(std::abs(x), p.weight_exponent);
    };
    const double eps = 1e-6;
    auto d1 = integrate_adaptive(direct_integrand, eps, 2.0, spec);
    auto d2 = integrate_adaptive([&](double x) { return direct_integrand(-x); },
                                 eps, 2.0, spec);
    const double direct =
        p.measure_const * (d1.value.real() + d2.value.real());
    CHECK(std::abs(subst - direct) <= 1e-8 * std::max(1.0, std::abs(subst)));
}
