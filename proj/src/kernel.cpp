#include "gft/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace gft {

double measure_density(const DeformParams& params, double x) {
    if (x == 0.0 && params.weight_exponent < 0.0)
        throw SingularPointError("measure_density: weight is singular at x = 0");
    if (params.weight_exponent == 0.0) return params.measure_const;
    return params.measure_const *
           std::pow(std::abs(x), params.weight_exponent);
}

specfun::BesselOptions kernel_bessel_options() {
    specfun::BesselOptions o;
    o.max_real_arg = 1e6;
    o.max_complex_arg = 60.0;
    return o;
}

KernelValue kernel_b(const DeformParams& params, double x, double lambda,
                     const specfun::BesselOptions& opts) {
    const double n = params.n;
    const double prod = lambda * x;
    const double arg = n * std::pow(std::abs(prod), 1.0 / n);
    const specfun::BesselOrder even_order(params.alpha);
    const specfun::BesselOrder odd_order(params.alpha + params.n);

    KernelValue kv;
    kv.even_part = specfun::bessel_normalized(even_order, arg, opts);
    if (prod == 0.0) {
        kv.odd_part = {0.0, 0.0};
    } else {
        kv.odd_part = params.odd_kernel_const * prod *
                      specfun::bessel_normalized(odd_order, arg, opts);
    }
    kv.value = kv.even_part + kv.odd_part;
    return kv;
}

double kernel_sup_estimate(const DeformParams& params, const ScanSpec& scan) {
    if (scan.count < 1 || !(scan.product_max > scan.product_min) ||
        !(scan.product_min > 0.0))
        throw DomainError("kernel_sup_estimate: degenerate scan grid");
    const double lr = std::log(scan.product_max / scan.product_min);
    double sup = 0.0;
    for (int i = 0; i < scan.count; ++i) {
        const double u =
            scan.product_min *
            std::exp(lr * (scan.count == 1 ? 0.0 : double(i) / (scan.count - 1)));
        // B depends on (x, λ) only through λx; scan both signs of the product
        for (double signed_u : {u, -u}) {
            const KernelValue kv = kernel_b(params, 1.0, signed_u);
            sup = std::max(sup, std::abs(kv.value));
        }
    }
    return sup;
}

} // namespace gft
