#include <doctest.h>

#include <cmath>
#include <complex>

#include "gft/specfun.hpp"

using namespace gft;
using specfun::BesselOrder;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

// reference values computed with an independent arbitrary-precision series
// oracle (tests/oracle/generate_reference.py)
struct JRef {
    double alpha, x, value;
};
const JRef kJRefs[] = {
    {1.0, 2.0, 0.5767248077568733872024},
    {-0.4, 10.0, -0.6548079099941091628639},
    {0.5, 25.0, -0.00529407000391092115608},
    {0.0, 25.0, 0.0962667832759581161735},
    {1.5, 50.0, -0.001164256230679430219745},
    {-0.4, 50.0, 0.5551578244643789574936},
    {2.5, 31.0, 0.0001582287708830458508102},
    {6.0, 40.0, 5.456262840501884358223e-7},
    {0.5, 200.0, -0.004366486486069972908665},
    {3.0, 120.0, 2.612371978120530009888e-7},
};
} // namespace

TEST_CASE("normalized Bessel: half-integer reductions") {
    CHECK(specfun::bessel_normalized(BesselOrder(1.7), 0.0) == 1.0);
    CHECK(std::abs(specfun::bessel_normalized(BesselOrder(0.5), kPi)) < 1e-14);
    CHECK(specfun::bessel_normalized(BesselOrder(-0.5), kPi) ==
          doctest::Approx(-1.0).epsilon(1e-13));
    // j_{1/2}(x) = sin x / x away from the zero
    const double x = 1.234;
    CHECK(specfun::bessel_normalized(BesselOrder(0.5), x) ==
          doctest::Approx(std::sin(x) / x).epsilon(1e-13));
}

TEST_CASE("normalized Bessel: frozen reference values") {
    for (const auto& r : kJRefs) {
        const double got = specfun::bessel_normalized(BesselOrder(r.alpha), r.x);
        CHECK_MESSAGE(std::abs(got - r.value) <= 1e-11 * std::abs(r.value),
                      "alpha=", r.alpha, " x=", r.x, " got=", got);
    }
}

TEST_CASE("normalized Bessel: evenness and boundedness") {
    for (double alpha : {-0.5, -0.3, 0.0, 0.7, 1.5, 3.0, 6.5}) {
        BesselOrder order(alpha);
        for (double x = 0.25; x <= 200.0; x *= 1.37) {
            const double v = specfun::bessel_normalized(order, x);
            CHECK(specfun::bessel_normalized(order, -x) == v);
            if (alpha >= -0.5) CHECK(std::abs(v) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("normalized Bessel: complex series matches the real path") {
    BesselOrder order(0.8);
    const std::complex<double> z{3.7, 0.0};
    // the complex overload routes exact-real arguments through the real path
    CHECK(specfun::bessel_normalized(order, z).real() ==
          specfun::bessel_normalized(order, 3.7));
    // complex evenness is exact: the series depends on z^2 only
    const std::complex<double> w{2.1, 1.3};
    CHECK(specfun::bessel_normalized(order, -w) ==
          specfun::bessel_normalized(order, w));
    // against the entire-function bound |j_a(z)| <= e^{|Im z|} for a >= -1/2
    CHECK(std::abs(specfun::bessel_normalized(order, w)) <=
          std::exp(std::abs(w.imag())) + 1e-12);
}

TEST_CASE("normalized Bessel: domain gates") {
    CHECK_THROWS_AS(BesselOrder(-1.0), DomainError);
    CHECK_THROWS_AS(BesselOrder(std::nan("")), DomainError);
    CHECK_THROWS_AS(specfun::bessel_normalized(BesselOrder(0.5), 200.5),
                    DomainError);
    CHECK_THROWS_AS(specfun::bessel_normalized(BesselOrder(0.5),
                                               std::complex<double>(30.0, 30.0)),
                    DomainError);
    // large order at an argument past the series fallback: the expansion
    // cannot reach tolerance and must say so
    CHECK_THROWS_AS(specfun::bessel_normalized(BesselOrder(12.0), 50.0),
                    ConvergenceError);
}

TEST_CASE("Gegenbauer: closed forms and low degrees") {
    CHECK(specfun::gegenbauer(0, 2.3, 0.4) == 1.0);
    CHECK(specfun::gegenbauer(1, 2.3, 0.4) ==
          doctest::Approx(2.0 * 2.3 * 0.4).epsilon(1e-14));
    CHECK(specfun::gegenbauer(2, 1.0, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
    // C_2^{(1)}(t) = 4t^2 - 1
    CHECK(specfun::gegenbauer(2, 1.0, -0.3) ==
          doctest::Approx(4.0 * 0.09 - 1.0).epsilon(1e-13));
    // frozen high-degree value
    CHECK(specfun::gegenbauer(50, 2.0, 0.9) ==
          doctest::Approx(9.42360029307419244).epsilon(1e-12));
}

TEST_CASE("Gegenbauer: three-term recurrence to degree 50") {
    for (double alpha : {0.6, 1.0, 1.7, 3.2}) {
        for (double t : {-0.95, -0.5, 0.17, 0.73, 1.0}) {
            for (int n = 2; n <= 50; ++n) {
                const double cn = specfun::gegenbauer(n, alpha, t);
                const double c1 = specfun::gegenbauer(n - 1, alpha, t);
                const double c2 = specfun::gegenbauer(n - 2, alpha, t);
                const double lhs = n * cn;
                const double rhs =
                    2.0 * t * (n + alpha - 1.0) * c1 - (n + 2.0 * alpha - 2.0) * c2;
                const double scale =
                    std::max({std::abs(lhs), std::abs(rhs), 1.0});
                CHECK_MESSAGE(std::abs(lhs - rhs) <= 1e-12 * scale,
                              "n=", n, " alpha=", alpha, " t=", t);
            }
        }
    }
}

TEST_CASE("Gegenbauer: domain gates") {
    CHECK_THROWS_AS(specfun::gegenbauer(3, 1.0, 1.5), DomainError);
    CHECK_THROWS_AS(specfun::gegenbauer(3, -1.0, 0.5), DomainError);
    CHECK_THROWS_AS(specfun::gegenbauer(-1, 1.0, 0.5), DomainError);
}

TEST_CASE("Kummer 1F1") {
    CHECK(specfun::kummer_1f1(0.7, 1.9, 0.0) == 1.0);
    for (double x : {0.5, 2.0, 10.0})
        CHECK(specfun::kummer_1f1(1.0, 1.0, x) ==
              doctest::Approx(std::exp(x)).epsilon(1e-12));
    // frozen arbitrary-precision values
    CHECK(specfun::kummer_1f1(0.5, 2.5, 3.0) ==
          doctest::Approx(2.367486756757978903816).epsilon(1e-12));
    CHECK(specfun::kummer_1f1(2.0, 0.5, 7.5) ==
          doctest::Approx(78987.20305913438323733).epsilon(1e-12));
    // monotone lower bound for positive parameters
    for (double a : {0.3, 1.0, 2.5})
        for (double b : {0.5, 1.5, 4.0})
            for (double x : {0.0, 0.3, 1.7, 9.0})
                CHECK(specfun::kummer_1f1(a, b, x) >= 1.0 - 1e-15);
    CHECK_THROWS_AS(specfun::kummer_1f1(1.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(specfun::kummer_1f1(1.0, -2.0, 1.0), DomainError);
    CHECK_THROWS_AS(specfun::kummer_1f1(1.0, 1.5, -0.5), DomainError);
}

TEST_CASE("Bessel-Poisson oracle vs series") {
    CHECK(specfun::bessel_poisson_oracle(BesselOrder(0.5), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-13));
    for (double alpha : {-0.4, -0.2, 0.0, 0.5, 1.0, 1.5, 3.0}) {
        BesselOrder order(alpha);
        for (double x : {0.5, 2.0, 10.0, 37.0, 50.0}) {
            const double o = specfun::bessel_poisson_oracle(order, x);
            const double s = specfun::bessel_normalized(order, x);
            CHECK_MESSAGE(std::abs(o - s) <= 1e-8 * std::max(1.0, std::abs(s)),
                          "alpha=", alpha, " x=", x, " oracle=", o,
                          " series=", s);
        }
    }
    CHECK_THROWS_AS(specfun::bessel_poisson_oracle(BesselOrder(-0.5), 1.0),
                    DomainError);
    CHECK_THROWS_AS(specfun::bessel_poisson_oracle(BesselOrder(0.5), 201.0),
                    DomainError);
}

TEST_CASE("Gegenbauer-Poisson oracle vs series") {
    CHECK(std::abs(specfun::gegenbauer_poisson_oracle(1.0, 2, 0.0)) < 1e-12);
    {
        specfun::BesselOrder o15(1.5);
        const double got = specfun::gegenbauer_poisson_oracle(0.5, 1, 3.0);
        CHECK(std::abs(got - 3.0 * specfun::bessel_normalized(o15, 3.0)) <=
              1e-9);
    }
    {
        specfun::BesselOrder o45(4.5);
        const double got = specfun::gegenbauer_poisson_oracle(1.5, 3, 7.0);
        CHECK(std::abs(got -
                       343.0 * specfun::bessel_normalized(o45, 7.0)) <=
              1e-8 * 343.0);
    }
    for (double alpha : {0.5, 1.0, 1.5, 2.0})
        for (int n : {1, 2, 3})
            for (double u : {0.5, 3.0, 7.0, 22.0, 50.0}) {
                const double o =
                    specfun::gegenbauer_poisson_oracle(alpha, n, u);
                const double s =
                    std::pow(u, n) *
                    specfun::bessel_normalized(BesselOrder(alpha + n), u);
                CHECK_MESSAGE(
                    std::abs(o - s) <= 1e-8 * std::max(1.0, std::pow(u, n)),
                    "alpha=", alpha, " n=", n, " u=", u);
            }
    CHECK_THROWS_AS(specfun::gegenbauer_poisson_oracle(0.0, 2, 1.0), DomainError);
    CHECK_THROWS_AS(specfun::gegenbauer_poisson_oracle(-0.4, 2, 1.0), DomainError);
}
