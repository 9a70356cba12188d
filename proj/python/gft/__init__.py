"""One-dimensional (k, 2/n)-generalized Fourier transform toolkit."""

from gft._core import (
    ConvergenceError,
    DecayEnvelope,
    DeformParams,
    DomainError,
    ParamError,
    audit,
    bessel_normalized,
    fit_envelope,
    forward,
    gegenbauer,
    heat_propagate,
    inverse,
    kernel_b,
    kummer_1f1,
    make_params,
    measure_density,
    plancherel_defect,
)

__all__ = [
    "ConvergenceError",
    "DecayEnvelope",
    "DeformParams",
    "DomainError",
    "ParamError",
    "audit",
    "bessel_normalized",
    "fit_envelope",
    "forward",
    "gegenbauer",
    "heat_propagate",
    "inverse",
    "kernel_b",
    "kummer_1f1",
    "make_params",
    "measure_density",
    "plancherel_defect",
]

__version__ = "0.1.0"
