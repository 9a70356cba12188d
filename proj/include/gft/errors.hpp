#pragma once

#include <stdexcept>
#include <string>

namespace gft {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the supported evaluation domain.
struct DomainError : Error {
    using Error::Error;
};

// Deformation parameters violate the admissibility constraint.
struct ParamError : Error {
    using Error::Error;
};

// Series or adaptive subdivision failed to reach tolerance within its cap.
struct ConvergenceError : Error {
    using Error::Error;
};

// Evaluation requested at the x = 0 singular point of the weight / Dunkl operator.
struct SingularPointError : Error {
    using Error::Error;
};

// Input carries no usable information (zero norm, too few samples, ...).
struct DegenerateInput : Error {
    using Error::Error;
};

struct FitError : Error {
    using Error::Error;
};

} // namespace gft
