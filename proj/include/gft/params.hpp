#pragma once

#include <complex>

#include "gft/errors.hpp"

namespace gft {

// Deformation parameters (k, n) together with every derived constant the
// kernel, measure and transform need.  Construct through make_params only;
// the derived fields are recomputed there and nowhere else.
struct DeformParams {
    double k = 0.0;
    int n = 1;
    double alpha = 0.0;           // kn - n/2
    double weight_exponent = 0.0; // 2k + 2/n - 2
    double measure_const = 0.0;   // (1/(2 Gamma(alpha+1))) (n/2)^alpha
    double log_measure_const = 0.0;

    // (-i)^n (n/2)^n Gamma(alpha+1)/Gamma(alpha+n+1), the odd-part coefficient
    // of the kernel; the Gamma ratio is formed in log space.
    std::complex<double> odd_kernel_const{0.0, 0.0};

    // 2*alpha + 1 = 2kn - n + 1: polynomial weight exponent after x = s^n.
    double substituted_exponent = 0.0;
};

// Validates k >= (n-1)/(2n) and n >= 1; throws ParamError otherwise.
DeformParams make_params(double k, int n);

} // namespace gft
