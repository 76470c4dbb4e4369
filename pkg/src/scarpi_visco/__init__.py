"""Scarpi variable-order fractional operators and the variable-order Maxwell model."""

from .errors import ConfigurationError, DomainError, NumericalFailure, ScarpiError, ValidationError
from .inversion import InversionConfig, LaplaceSymbol, principal_power, stehfest_invert, talbot_invert
from .kernels import (
    KernelPair,
    build_kernels,
    derivative_transform,
    integral_transform,
    kernel_time_values,
    sonine_residual,
)
from .special import gamma_fn, mittag_leffler
from .transition import (
    ClampedLinear,
    Constant,
    Exponential,
    MittagLefflerTransition,
    TransitionFunction,
    alpha_at,
    laplace_A,
    validate,
)
from .viscoelastic import (
    G_hat_d,
    J_hat_d,
    J_star_hat,
    MaxwellParams,
    StepExperiment,
    constant_order_reference,
    creep_compliance,
    relaxation_modulus,
    run_step_experiment,
)

__version__ = "0.1.0"
