#pragma once

// Special functions backing the transform kernel: the normalized Bessel
// function j_alpha (power series in double-double below a crossover, Hankel
// asymptotic expansion beyond it), Gegenbauer polynomials via their explicit
// finite sum, the confluent hypergeometric 1F1, and the two Poisson-type
// integral representations used as independent oracles for j_alpha.

#include <complex>

#include "gft/errors.hpp"

namespace gft::specfun {

// Order of a normalized Bessel function.  The library only ever builds
// alpha = kn - n/2 or kn + n/2 with k >= (n-1)/(2n), hence alpha >= -1/2,
// but any alpha > -1 is accepted.
struct BesselOrder {
    double alpha;
    explicit BesselOrder(double a);
};

struct BesselOptions {
    double max_real_arg = 200.0;    // DomainError beyond this on the real line
    double max_complex_arg = 40.0;  // power-series-only regime off the real line
    double series_crossover = 25.0; // series below, asymptotic expansion above
    int series_term_cap = 400;
};

// j_alpha(x) = 2^alpha Gamma(alpha+1) x^{-alpha} J_alpha(x), j_alpha(0) = 1.
double bessel_normalized(const BesselOrder& order, double x,
                         const BesselOptions& opts = {});
std::complex<double> bessel_normalized(const BesselOrder& order,
                                       std::complex<double> z,
                                       const BesselOptions& opts = {});

// Gegenbauer polynomial C_n^{(alpha)}(t) by its explicit finite sum,
// log-Gamma ratios throughout so high degrees do not overflow.
double gegenbauer(int n, double alpha, double t);

// Confluent hypergeometric 1F1(a; b; x), series evaluation, x >= 0 only.
double kummer_1f1(double a, double b, double x);

// Poisson integral representation of j_alpha (alpha > -1/2), evaluated by
// tanh-sinh quadrature; independent of the series/asymptotic path above.
double bessel_poisson_oracle(const BesselOrder& order, double x);

// Gegenbauer-Poisson representation of u^n j_{alpha+n}(u) (alpha > 0),
// including its exact closed-form constant.
double gegenbauer_poisson_oracle(double alpha, int n, double u);

// log Gamma / log Beta helpers (positive arguments).
double log_gamma(double x);
double log_beta(double x, double y);

} // namespace gft::specfun
