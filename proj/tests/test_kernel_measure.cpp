#include <doctest.h>

#include <cmath>
#include <complex>

#include "gft/kernel.hpp"
#include "gft/params.hpp"

using namespace gft;

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779399;
}

TEST_CASE("make_params derives the constants") {
    auto p = make_params(0.0, 1);
    CHECK(p.alpha == doctest::Approx(-0.5));
    CHECK(p.weight_exponent == doctest::Approx(0.0));
    CHECK(p.measure_const == doctest::Approx(kInvSqrt2Pi).epsilon(1e-14));

    auto q = make_params(0.5, 2);
    CHECK(q.alpha == doctest::Approx(0.0));
    CHECK(q.weight_exponent == doctest::Approx(0.0));
    CHECK(q.measure_const == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(q.substituted_exponent == doctest::Approx(1.0));

    CHECK_THROWS_AS(make_params(0.1, 2), ParamError);
    CHECK_THROWS_AS(make_params(0.5, 0), ParamError);
    CHECK_THROWS_AS(make_params(std::nan(""), 1), ParamError);
    // the admissibility boundary itself is allowed
    CHECK(make_params(0.25, 2).alpha == doctest::Approx(-0.5));
}

TEST_CASE("measure density") {
    auto p1 = make_params(0.0, 1);
    CHECK(measure_density(p1, 0.37) == doctest::Approx(kInvSqrt2Pi));
    CHECK(measure_density(p1, -12.0) == doctest::Approx(kInvSqrt2Pi));

    auto p2 = make_params(0.5, 2);
    CHECK(measure_density(p2, 3.0) == doctest::Approx(0.5));

    auto p3 = make_params(1.0 / 3.0, 3);
    CHECK(p3.weight_exponent == doctest::Approx(-2.0 / 3.0));
    CHECK_THROWS_AS(measure_density(p3, 0.0), SingularPointError);
    CHECK(measure_density(p3, 0.5) == measure_density(p3, -0.5));
    CHECK(measure_density(p3, 0.5) > 0.0);
}

TEST_CASE("kernel reduces to the classical exponential at k=0, n=1") {
    auto p = make_params(0.0, 1);
    for (double x : {-3.0, -0.7, 0.0, 0.4, 2.9})
        for (double lam : {-2.0, -0.3, 0.0, 1.1, 4.0}) {
            const auto kv = kernel_b(p, x, lam);
            const std::complex<double> want =
                std::exp(std::complex<double>(0.0, -lam * x));
            CHECK(std::abs(kv.value - want) <= 1e-12);
            CHECK(std::abs(kv.value - (kv.even_part + kv.odd_part)) == 0.0);
        }
}

TEST_CASE("kernel at lambda = 0 and the n=2 closed form") {
    auto p = make_params(0.8, 3);
    const auto kv = kernel_b(p, 1.7, 0.0);
    CHECK(kv.value == std::complex<double>(1.0, 0.0));
    CHECK(kv.odd_part == std::complex<double>(0.0, 0.0));

    // B(1, 1) = J_0(2) - J_2(2) at k = 1/2, n = 2
    auto q = make_params(0.5, 2);
    const auto kv2 = kernel_b(q, 1.0, 1.0);
    CHECK(kv2.value.real() ==
          doctest::Approx(-0.1289432494744020510988).epsilon(1e-12));
    CHECK(std::abs(kv2.value.imag()) <= 1e-14);
}

TEST_CASE("kernel symmetry and parity are exact") {
    auto p = make_params(0.9, 2);
    for (double x : {0.3, 1.7})
        for (double lam : {-2.2, 0.9}) {
            const auto a = kernel_b(p, x, lam);
            const auto b = kernel_b(p, lam, x);
            CHECK(a.value == b.value);
            const auto r = kernel_b(p, -x, lam);
            CHECK(r.even_part == a.even_part);
            CHECK(r.odd_part == -a.odd_part);
        }
}

TEST_CASE("kernel reality for even n, conjugation for odd n") {
    for (double k : {0.5, 1.1}) {
        auto p = make_params(k, 2);
        for (double x : {0.4, 1.9})
            for (double lam : {-3.0, 0.8, 14.0}) {
                const auto kv = kernel_b(p, x, lam);
                CHECK(std::abs(kv.value.imag()) <=
                      1e-12 * (1.0 + std::abs(kv.value)));
            }
    }
    for (int n : {1, 3}) {
        auto p = make_params(0.8, n);
        for (double x : {0.4, 1.9})
            for (double lam : {0.6, 2.3}) {
                const auto a = kernel_b(p, x, -lam);
                const auto b = kernel_b(p, x, lam);
                CHECK(std::abs(a.value - std::conj(b.value)) <=
                      1e-12 * (1.0 + std::abs(b.value)));
            }
    }
}

TEST_CASE("kernel sup estimate") {
    auto p = make_params(0.0, 1);
    CHECK(kernel_sup_estimate(p, {}) == doctest::Approx(1.0).epsilon(1e-10));

    ScanSpec degenerate;
    degenerate.count = 0;
    CHECK_THROWS_AS(kernel_sup_estimate(p, degenerate), DomainError);

    auto q = make_params(0.5, 2);
    ScanSpec wide;
    wide.product_max = 100.0;
    const double sup = kernel_sup_estimate(q, wide);
    CHECK(std::isfinite(sup));
    CHECK(sup >= 0.999);
}
