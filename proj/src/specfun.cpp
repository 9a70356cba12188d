#include "gft/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gft/detail/ddouble.hpp"
#include "gft/quadrature.hpp"

namespace gft::specfun {

using detail::DDouble;
using detail::DDComplex;

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
    return std::lgamma(x);
}

double log_beta(double x, double y) {
    return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

BesselOrder::BesselOrder(double a) : alpha(a) {
    if (!(a > -1.0) || !std::isfinite(a))
        throw DomainError("BesselOrder: alpha must be finite and > -1");
}

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Power series sum_k c_k with c_0 = 1,
// c_{k+1} = -c_k (x/2)^2 / ((k+1)(alpha+k+1)), in double-double: the terms
// reach ~e^{|x|}/(pi |x|) before they decay, so a plain double sum would lose
// up to 20 digits to cancellation at x ~ 45.
double series_real_dd(double alpha, double x, int term_cap) {
    const DDouble q = detail::two_prod(x / 2.0, x / 2.0);
    DDouble term(1.0);
    DDouble sum(1.0);
    for (int k = 0; k < term_cap; ++k) {
        term = detail::mul(term, q);
        term = detail::div(term, -(k + 1.0));
        term = detail::div(term, detail::two_sum(alpha, k + 1.0));
        sum = detail::add(sum, term);
        if (std::abs(term.hi) <= 1e-34 * std::abs(sum.hi) + 1e-320)
            return double(sum);
    }
    throw ConvergenceError("bessel_normalized: series term cap reached");
}

std::complex<double> series_complex_dd(double alpha, std::complex<double> z,
                                       int term_cap) {
    const std::complex<double> zh = z / 2.0;
    DDComplex q(detail::sub(detail::two_prod(zh.real(), zh.real()),
                            detail::two_prod(zh.imag(), zh.imag())),
                detail::mul(detail::two_prod(zh.real(), zh.imag()), 2.0));
    DDComplex term(DDouble(1.0), DDouble(0.0));
    DDComplex sum = term;
    for (int k = 0; k < term_cap; ++k) {
        term = detail::mul(term, q);
        term = detail::div(term, DDouble(-(k + 1.0)));
        term = detail::div(term, detail::two_sum(alpha, k + 1.0));
        sum = detail::add(sum, term);
        double tmag = std::abs(term.re.hi) + std::abs(term.im.hi);
        double smag = std::abs(sum.re.hi) + std::abs(sum.im.hi);
        if (tmag <= 1e-34 * smag + 1e-320) return sum.to_complex();
    }
    throw ConvergenceError("bessel_normalized: complex series term cap reached");
}

// Hankel asymptotic expansion of J_alpha rescaled to j_alpha; truncated at the
// smallest term.  Returns false when the expansion cannot reach tolerance
// (large order at moderate argument), in which case the caller falls back to
// the series.
bool asymptotic_real(double alpha, double x, double& out) {
    const double mu = 4.0 * alpha * alpha;
    double P = 1.0, Q = 0.0;
    double term = 1.0;
    double prev = 1.0;
    const int cap = 40;
    double smallest = 1.0;
    for (int m = 1; m <= cap; ++m) {
        term *= (mu - (2.0 * m - 1.0) * (2.0 * m - 1.0)) / (8.0 * m * x);
        const double mag = std::abs(term);
        if (mag > prev) break; // divergence onset: stop at the previous term
        if (m % 2 == 1)
            Q += (m % 4 == 1) ? term : -term;
        else
            P += (m % 4 == 0) ? term : -term;
        prev = mag;
        smallest = mag;
        if (mag < 1e-18) break;
    }
    if (smallest > 1e-13) return false;

    // phase x - alpha pi/2 - pi/4, reduced in double-double
    DDouble w = detail::sub(DDouble(x), detail::two_prod(alpha, kPi / 2.0));
    w = detail::sub(w, DDouble(0.78539816339744830961, 3.061616997868383e-17));
    const double c = std::cos(w.hi) - w.lo * std::sin(w.hi);
    const double s = std::sin(w.hi) + w.lo * std::cos(w.hi);
    const double amp = std::sqrt(2.0 / (kPi * x));
    const double J = amp * (P * c - Q * s);
    const double pref =
        std::exp(alpha * std::log(2.0) + std::lgamma(alpha + 1.0) - alpha * std::log(x));
    out = pref * J;
    return true;
}

// the dd series stays below ~3e-14 relative error up to here
constexpr double kSeriesFallbackMax = 45.0;

} // namespace

double bessel_normalized(const BesselOrder& order, double x,
                         const BesselOptions& opts) {
    const double ax = std::abs(x);
    if (!std::isfinite(ax)) throw DomainError("bessel_normalized: non-finite argument");
    if (ax > opts.max_real_arg)
        throw DomainError("bessel_normalized: |x| exceeds the supported radius");
    if (ax == 0.0) return 1.0;
    if (ax <= opts.series_crossover)
        return series_real_dd(order.alpha, ax, opts.series_term_cap);
    double v;
    if (asymptotic_real(order.alpha, ax, v)) return v;
    if (ax <= kSeriesFallbackMax)
        return series_real_dd(order.alpha, ax, opts.series_term_cap);
    throw ConvergenceError(
        "bessel_normalized: asymptotic expansion failed to converge at this order");
}

std::complex<double> bessel_normalized(const BesselOrder& order,
                                       std::complex<double> z,
                                       const BesselOptions& opts) {
    if (z.imag() == 0.0)
        return {bessel_normalized(order, z.real(), opts), 0.0};
    const double az = std::abs(z);
    if (!std::isfinite(az)) throw DomainError("bessel_normalized: non-finite argument");
    if (az > opts.max_complex_arg)
        throw DomainError("bessel_normalized: |z| exceeds the complex series radius");
    return series_complex_dd(order.alpha, z, opts.series_term_cap);
}

double gegenbauer(int n, double alpha, double t) {
    if (n < 0) throw DomainError("gegenbauer: degree must be >= 0");
    if (!(alpha > 0.0)) throw DomainError("gegenbauer: alpha must be > 0");
    if (!(t >= -1.0 && t <= 1.0))
        throw DomainError("gegenbauer: t outside [-1, 1]");
    if (n == 0) return 1.0;

    if (std::abs(t) < 5e-101) {
        // (2t)^2 would underflow in the term recurrence; the sum collapses to
        // its lowest-order term: C_n(0) for even n, the linear term for odd n
        const int h = n / 2;
        if (n % 2 == 0) {
            const double lm = std::lgamma(h + alpha) - std::lgamma(alpha) -
                              std::lgamma(h + 1.0);
            return (h % 2 == 0 ? 1.0 : -1.0) * std::exp(lm);
        }
        const double lm = std::lgamma(h + 1.0 + alpha) - std::lgamma(alpha) -
                          std::lgamma(h + 1.0);
        return (h % 2 == 0 ? 1.0 : -1.0) * std::exp(lm) * (2.0 * t);
    }

    // Explicit finite sum with the leading term in log space (no overflow for
    // large degree) and the exact ratio between consecutive terms carried in
    // double-double: the alternating sum cancels down to ~17 digits below the
    // largest term at high degree, which plain double terms cannot survive.
    const double lm0 = std::lgamma(n + alpha) - std::lgamma(alpha) -
                       std::lgamma(n + 1.0) +
                       n * std::log(std::abs(2.0 * t));
    const double sign0 = (t < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
    double shift = lm0; // value = sum * exp(shift); rescaled on overflow risk
    DDouble term(sign0);
    DDouble sum = term;
    const DDouble four_t2 = detail::two_prod(2.0 * t, 2.0 * t);
    constexpr double kRescale = 0x1p-256;
    constexpr double kLogRescale = 256.0 * 0.69314718055994530942;
    for (int k = 0; k + 1 <= n / 2; ++k) {
        // T_{k+1}/T_k = -(n-2k)(n-2k-1) / ((k+1)(n-k-1+alpha)(2t)^2);
        // every factor is applied at dd accuracy, so the heavy cancellation
        // of the alternating sum happens with ~32 digits in hand
        const double num = -double(n - 2 * k) * double(n - 2 * k - 1);
        term = detail::mul(term, num);
        term = detail::div(term, k + 1.0);
        term = detail::div(term, detail::two_sum(alpha, double(n - k - 1)));
        term = detail::div(term, four_t2);
        sum = detail::add(sum, term);
        if (std::abs(term.hi) > 1e250 || std::abs(sum.hi) > 1e250) {
            term = detail::mul(term, kRescale);
            sum = detail::mul(sum, kRescale);
            shift += kLogRescale;
        }
    }
    return double(sum) * std::exp(shift);
}

double kummer_1f1(double a, double b, double x) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x))
        throw DomainError("kummer_1f1: non-finite argument");
    if (b <= 0.0 && b == std::floor(b))
        throw DomainError("kummer_1f1: b must not be a nonpositive integer");
    if (x < 0.0) throw DomainError("kummer_1f1: only x >= 0 is supported");
    if (x == 0.0) return 1.0;

    constexpr int kTermCap = 10000;
    double term = 1.0, sum = 1.0;
    for (int m = 0; m < kTermCap; ++m) {
        term *= (a + m) * x / ((b + m) * (m + 1.0));
        sum += term;
        if (std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
    }
    throw ConvergenceError("kummer_1f1: term cap reached");
}

double bessel_poisson_oracle(const BesselOrder& order, double x) {
    const double alpha = order.alpha;
    if (!(alpha > -0.5))
        throw DomainError("bessel_poisson_oracle: requires alpha > -1/2");
    if (std::abs(x) > 200.0)
        throw DomainError("bessel_poisson_oracle: |x| > 200 unsupported");
    const double c =
        2.0 * std::exp(log_gamma(alpha + 1.0) -
                       0.5 * std::log(kPi) - log_gamma(alpha + 0.5));
    const double ax = std::abs(x);
    auto integrand = [&](double t, double /*dl*/, double dr) -> std::complex<double> {
        // (1 - t^2)^(alpha - 1/2) with 1 - t = dr kept exact near the endpoint
        return std::pow(dr * (1.0 + t), alpha - 0.5) * std::cos(ax * t);
    };
    auto r = quad::tanh_sinh(integrand, 0.0, 1.0, 1e-14, 11);
    return c * r.value.real();
}

double gegenbauer_poisson_oracle(double alpha, int n, double u) {
    if (!(alpha > 0.0))
        throw DomainError("gegenbauer_poisson_oracle: requires alpha > 0");
    if (n < 1) throw DomainError("gegenbauer_poisson_oracle: n must be >= 1");
    if (std::abs(u) > 200.0)
        throw DomainError("gegenbauer_poisson_oracle: |u| > 200 unsupported");
    const double log_a_const = (2.0 * alpha + n) * std::log(2.0) +
                               std::lgamma(n + 1.0) - std::log(kPi) +
                               std::log(alpha + n) + log_beta(alpha, alpha + n);
    const double a_const = std::exp(log_a_const);
    const double phase = n * kPi / 2.0;
    auto integrand = [&](double t, double /*dl*/, double dr) -> std::complex<double> {
        return gegenbauer(n, alpha, t) * std::pow(dr * (1.0 + t), alpha - 0.5) *
               std::cos(u * t - phase);
    };
    auto r = quad::tanh_sinh(integrand, 0.0, 1.0, 1e-14, 11);
    return a_const * r.value.real();
}

} // namespace gft::specfun
