#include "gft/params.hpp"

#include <cmath>

namespace gft {

DeformParams make_params(double k, int n) {
    if (n < 1) throw ParamError("make_params: n must be a positive integer");
    if (!std::isfinite(k)) throw ParamError("make_params: k must be finite");
    const double kmin = (n - 1.0) / (2.0 * n);
    if (k < kmin)
        throw ParamError("make_params: k must satisfy k >= (n-1)/(2n)");

    DeformParams p;
    p.k = k;
    p.n = n;
    p.alpha = k * n - n / 2.0;
    p.weight_exponent = 2.0 * k + 2.0 / n - 2.0;
    p.substituted_exponent = 2.0 * p.alpha + 1.0;
    p.log_measure_const =
        -std::log(2.0) - std::lgamma(p.alpha + 1.0) + p.alpha * std::log(n / 2.0);
    p.measure_const = std::exp(p.log_measure_const);

    // (-i)^n cycles 1, -i, -1, i
    static const std::complex<double> kMinusIPow[4] = {
        {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    const double log_ratio =
        std::lgamma(p.alpha + 1.0) - std::lgamma(p.alpha + n + 1.0);
    p.odd_kernel_const =
        kMinusIPow[n % 4] * std::exp(n * std::log(n / 2.0) + log_ratio);
    return p;
}

} // namespace gft
