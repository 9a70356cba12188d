#pragma once

// Closed-form test functions and the tiny string DSL the CLI uses to name
// them: gaussian:<a>, bump:<r>, hermite1, oddgauss, counterexample:<a>,<b>,<d>.

#include <optional>
#include <string>
#include <vector>

#include "gft/heat.hpp"
#include "gft/transform.hpp"

namespace gft::functions {

struct NamedFunction {
    std::string name; // canonical DSL spelling
    transform::Profile profile;
    // analytic Dunkl Laplacian where the family has one in closed form
    std::optional<quad::RealToComplex> dunkl;
};

// Throws DomainError on an unparseable spec, ParamError on invalid family
// parameters (e.g. counterexample delta outside (a, 1/(4b))).
NamedFunction parse_function(const std::string& spec, const DeformParams& params);

// The repo's fixed basket: deformed Gaussians at rates 0.3/0.5/1, a compactly
// supported bump, and the odd-weighted Gaussian u e^{-u^2}.
std::vector<NamedFunction> test_basket(const DeformParams& params);

// e^{-n a |x|^{2/n}} with its analytic Dunkl Laplacian and decay hint.
NamedFunction deformed_gaussian(const DeformParams& params, double a);

heat::DifferentiableProfile differentiable(const NamedFunction& f,
                                           const DeformParams& params);

} // namespace gft::functions
