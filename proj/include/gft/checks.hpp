#pragma once

// The identity suite behind `gft check`: Plancherel, inversion round trip,
// the even/odd split identity, the deformed-Gaussian spectral identity, the
// two Poisson oracles, and the multiplier symbol identity.

#include <string>
#include <vector>

#include "gft/params.hpp"
#include "gft/quadrature.hpp"

namespace gft::checks {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    bool warned = false;
};

struct SuiteReport {
    std::vector<CheckResult> results;
    bool all_pass() const;
    bool any_warning() const;
};

SuiteReport run_identity_suite(const DeformParams& params,
                               const quad::QuadSpec& spec);

} // namespace gft::checks
