"""Variable-order fractional Maxwell model.

Constitutive law in dimensionless time::

    sigma + a1 D^{alpha(t)} sigma = b1 D^{alpha(t)} eps

with ``D^{alpha(t)}`` the Scarpi derivative. Setting ``a1 = 0`` gives the
variable-order Scott Blair model. Material functions are computed in their
dimensionless form ``G_d = G / b1`` and ``J_d = b1 J`` by Talbot inversion of

    G_d~(s) = s**(sA - 1) / (1 + a1 s**sA)
    J_d~(s) = (1 + a1 s**sA) / s**(sA + 1)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .curves import CurveSamples, check_grid
from .errors import DomainError, NumericalFailure, ValidationError
from .inversion import DEFAULT_CONFIG, InversionConfig, LaplaceSymbol, talbot_invert
from .kernels import order_power
from .special import gamma_fn, mittag_leffler
from .transition import TransitionFunction, require_valid

# relative slack for the monotonicity assertions on inverted curves
_MONOTONE_SLACK = 1e-9


@dataclass(frozen=True)
class MaxwellParams:
    """Model coefficients; ``a1 = 0`` selects the Scott Blair sub-model."""

    a1: float = 1.0
    b1: float = 1.0
    time_scale_T: float = 1.0

    def __post_init__(self):
        problems = []
        if not (self.a1 >= 0 and math.isfinite(self.a1)):
            problems.append(f"a1 must be >= 0, got {self.a1}")
        if not (self.b1 > 0 and math.isfinite(self.b1)):
            problems.append(f"b1 must be > 0, got {self.b1}")
        if not (self.time_scale_T > 0 and math.isfinite(self.time_scale_T)):
            problems.append(f"time_scale_T must be > 0, got {self.time_scale_T}")
        if problems:
            raise ValidationError("; ".join(problems), problems)


@dataclass(frozen=True)
class StepExperiment:
    """A step-strain (relaxation) or step-stress (creep) test.

    ``initial_stress`` / ``initial_strain`` are the values at ``0+``. Leaving
    the one that is not fixed by the experiment as ``None`` imposes the
    constraint ``a1 sigma(0+) = b1 eps(0+)``.
    """

    kind: Literal["relaxation", "creep"]
    amplitude: float
    initial_stress: float | None = None
    initial_strain: float | None = None

    def __post_init__(self):
        if self.kind not in ("relaxation", "creep"):
            raise ValidationError(f"unknown experiment kind {self.kind!r}")
        if self.amplitude == 0 or not math.isfinite(self.amplitude):
            raise ValidationError("step amplitude must be finite and non-zero")
        if self.kind == "relaxation" and self.initial_strain not in (None, self.amplitude):
            raise ValidationError("relaxation holds the strain at the amplitude; initial_strain must match")
        if self.kind == "creep" and self.initial_stress not in (None, self.amplitude):
            raise ValidationError("creep holds the stress at the amplitude; initial_stress must match")

    @property
    def constrained(self) -> bool:
        free = self.initial_stress if self.kind == "relaxation" else self.initial_strain
        return free is None

    def initial_conditions(self, params: MaxwellParams) -> tuple[float, float]:
        """``(sigma(0+), eps(0+))``, filling the free one from the constraint."""
        if self.kind == "relaxation":
            eps0 = self.amplitude
            if self.initial_stress is not None:
                return self.initial_stress, eps0
            sigma0 = math.inf if params.a1 == 0 else params.b1 * eps0 / params.a1
            return sigma0, eps0
        sigma0 = self.amplitude
        if self.initial_strain is not None:
            return sigma0, self.initial_strain
        return sigma0, params.a1 * sigma0 / params.b1


def G_hat_d(f: TransitionFunction, a1: float, s):
    """Laplace transform of the dimensionless relaxation modulus."""
    s = np.asarray(s, dtype=complex)
    p = order_power(f, s)
    denom = 1.0 + a1 * p
    if np.any(denom == 0):
        raise DomainError("1 + a1 s**(sA) vanishes; s is not admissible")
    return (p / s / denom)[()]


def J_hat_d(f: TransitionFunction, a1: float, s):
    """Laplace transform of the dimensionless creep compliance."""
    s = np.asarray(s, dtype=complex)
    p = order_power(f, s)
    return ((1.0 + a1 * p) / (p * s))[()]


def J_star_hat(f: TransitionFunction, params: MaxwellParams, sigma0: float, eps0: float, s):
    """Generalised creep transform for arbitrary ``eps(0+)``; strain is ``sigma0 J_star(t)``."""
    if sigma0 == 0:
        raise DomainError("sigma0 = 0 is not a creep experiment")
    s = np.asarray(s, dtype=complex)
    p = order_power(f, s)
    return ((1.0 + params.b1 * eps0 / sigma0 * p) / (p * s) / params.b1)[()]


def _symbol(func, f, label):
    return LaplaceSymbol(func, cut_points=f.cut_points, label=label, left_growth=f.left_growth)


def _params_echo(f, label, **extra):
    items = {"quantity": label, "transition": f.kind, **f.params(), **extra}
    return " ".join(f"{k}={v}" for k, v in items.items())


def _invert_on_grid(F, t, cfg):
    try:
        return talbot_invert(F, t, cfg)
    except NumericalFailure as exc:
        raise NumericalFailure(f"{F.label}: {exc}") from exc


def _check_monotone(values, t, label, direction):
    if np.any(values <= 0):
        i = int(np.argmax(values <= 0))
        raise NumericalFailure(f"{label} not positive at t={t[i]:g} ({values[i]:.3e})")
    step = np.diff(values) * direction
    slack = _MONOTONE_SLACK * np.abs(values[1:])
    if np.any(step < -slack):
        i = int(np.argmax(step < -slack)) + 1
        trend = "nonincreasing" if direction < 0 else "nondecreasing"
        raise NumericalFailure(f"{label} is not {trend} at t={t[i]:g}")


def relaxation_modulus(
    f: TransitionFunction, a1: float, t_grid, cfg: InversionConfig = DEFAULT_CONFIG
) -> CurveSamples:
    """Dimensionless relaxation modulus ``G_d(t)`` on a positive grid."""
    require_valid(f)
    t = check_grid(t_grid)
    F = _symbol(lambda s: G_hat_d(f, a1, s), f, f"Gd[{f.kind}]")
    values = _invert_on_grid(F, t, cfg)
    _check_monotone(values, t, "Gd", -1)
    return CurveSamples(t, values, "Gd", _params_echo(f, "Gd", a1=a1, nodes=cfg.node_count))


def creep_compliance(
    f: TransitionFunction, a1: float, t_grid, cfg: InversionConfig = DEFAULT_CONFIG
) -> CurveSamples:
    """Dimensionless creep compliance ``J_d(t)`` on a positive grid."""
    require_valid(f)
    t = check_grid(t_grid)
    F = _symbol(lambda s: J_hat_d(f, a1, s), f, f"Jd[{f.kind}]")
    values = _invert_on_grid(F, t, cfg)
    _check_monotone(values, t, "Jd", +1)
    return CurveSamples(t, values, "Jd", _params_echo(f, "Jd", a1=a1, nodes=cfg.node_count))


def run_step_experiment(
    f: TransitionFunction,
    params: MaxwellParams,
    exp: StepExperiment,
    t_grid,
    cfg: InversionConfig = DEFAULT_CONFIG,
) -> CurveSamples:
    """Stress history of a relaxation test or strain history of a creep test."""
    require_valid(f)
    t = check_grid(t_grid)
    sigma0, eps0 = exp.initial_conditions(params)
    echo = dict(a1=params.a1, b1=params.b1, kind=exp.kind, amplitude=exp.amplitude)
    if exp.kind == "relaxation":
        gd = relaxation_modulus(f, params.a1, t, cfg).values
        if exp.constrained:
            values = exp.amplitude * params.b1 * gd
        else:
            values = params.a1 * sigma0 * gd
        echo["sigma0+"] = sigma0
        return CurveSamples(t, values, "stress", _params_echo(f, "stress", **echo))
    F = _symbol(lambda s: J_star_hat(f, params, sigma0, eps0, s), f, f"Jstar[{f.kind}]")
    values = sigma0 * _invert_on_grid(F, t, cfg)
    echo["eps0+"] = eps0
    return CurveSamples(t, values, "strain", _params_echo(f, "strain", **echo))


def constant_order_reference(
    model: Literal["Maxwell", "ScottBlair"],
    which: Literal["G", "J"],
    alpha: float,
    a1: float,
    t,
):
    """Closed-form constant-order material functions (dimensionless).

    ============  ==============================  =========================
    model         G                               J
    ============  ==============================  =========================
    Maxwell       E_alpha(-t**alpha / a1) / a1    t**alpha/Gamma(1+alpha) + a1
    ScottBlair    t**-alpha / Gamma(1-alpha)      t**alpha/Gamma(1+alpha)
    ============  ==============================  =========================
    """
    if not (0 < alpha <= 1):
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0):
        raise DomainError("reference material functions need t >= 0")
    if model == "Maxwell":
        if not a1 > 0:
            raise DomainError("the Maxwell reference requires a1 > 0")
        if which == "G":
            out = mittag_leffler(alpha, -(t_arr**alpha) / a1) / a1
        elif which == "J":
            out = t_arr**alpha / gamma_fn(alpha + 1) + a1
        else:
            raise DomainError(f"which must be 'G' or 'J', got {which!r}")
    elif model == "ScottBlair":
        if which == "G":
            if np.any(t_arr == 0):
                raise DomainError("Scott Blair relaxation modulus diverges at t = 0")
            out = t_arr**-alpha / gamma_fn(1 - alpha)
        elif which == "J":
            out = t_arr**alpha / gamma_fn(alpha + 1)
        else:
            raise DomainError(f"which must be 'G' or 'J', got {which!r}")
    else:
        raise DomainError(f"unknown model {model!r}")
    return np.asarray(out, dtype=float)[()]


def reference_model(a1: float) -> str:
    return "Maxwell" if a1 > 0 else "ScottBlair"
