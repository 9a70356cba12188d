#pragma once

// The transform kernel B_{k,n}(x, λ) with its even/odd split, the weighted
// measure density, and a scan-based estimate of sup |B|.

#include <complex>

#include "gft/params.hpp"
#include "gft/specfun.hpp"

namespace gft {

struct KernelValue {
    std::complex<double> value;
    std::complex<double> even_part; // j_alpha term, real on real arguments
    std::complex<double> odd_part;  // carries the (-i)^n constant
};

// Density of dμ_{k,n} with respect to Lebesgue measure at x.
// SingularPointError at x = 0 when the weight exponent is negative.
double measure_density(const DeformParams& params, double x);

// Bessel evaluation options used inside kernel/transform paths: same series
// and crossover as the defaults but without the 200 gate, since the
// asymptotic expansion only improves with the argument.
specfun::BesselOptions kernel_bessel_options();

// B_{k,n}(x, λ); even_part + odd_part == value, the parts odd/even in each
// argument separately.
KernelValue kernel_b(const DeformParams& params, double x, double lambda,
                     const specfun::BesselOptions& opts = kernel_bessel_options());

struct ScanSpec {
    double product_min = 1e-3; // scan range in u = λx
    double product_max = 1e3;
    int count = 2000; // logarithmic grid per sign
};

// max |B_{k,n}| over the scan grid; a lower bound for sup |B|.
double kernel_sup_estimate(const DeformParams& params, const ScanSpec& scan);

} // namespace gft
