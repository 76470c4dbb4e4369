"""Built-in verification suites run by ``scarpi-visco verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .inversion import InversionConfig, LaplaceSymbol, stehfest_invert, talbot_invert
from .kernels import build_kernels, sonine_residual
from .transition import ClampedLinear, Constant, Exponential, MittagLefflerTransition, TransitionFunction
from .viscoelastic import G_hat_d, J_hat_d, constant_order_reference, creep_compliance, relaxation_modulus

EXP_FAST = Exponential(0.6, 0.8, 2.0)
EXP_SLOW = Exponential(0.4, 0.8, 1.0)
ML_SLOW = MittagLefflerTransition(0.4, 0.8, 1.0, 0.5)
DEFAULT_VARIANTS = (Constant(0.6), EXP_FAST, ML_SLOW, ClampedLinear(0.1, 0.5))

REDUCTION_TOL = 1e-6
RECIPROCITY_TOL = 1e-12
SONINE_TOL = 1e-3
SONINE_TOL_CONSTANT = 1e-6
INVERTER_TOL_KERNEL = 1e-4
INVERTER_TOL_EXP = 1e-6
TRANSFORM_TOL = 1e-6


@dataclass(frozen=True)
class Check:
    name: str
    measured: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.measured <= self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: residual={self.measured:.3e} tol={self.tolerance:.1e}"


def _describe(f: TransitionFunction) -> str:
    args = ",".join(f"{v:g}" for v in f.params().values())
    return f"{f.kind}({args})"


def sample_points(n=100, seed=0):
    """Pseudo-random ``s`` with ``Re s`` in [0.1, 10] and ``|Im s| <= 10``."""
    rng = np.random.default_rng(seed)
    return rng.uniform(0.1, 10.0, n) + 1j * rng.uniform(-10.0, 10.0, n)


def reduction_suite(cfg: InversionConfig) -> list[Check]:
    t = np.logspace(-1, 1, 50)
    checks = []
    for a1 in (1.0, 0.0):
        model = "Maxwell" if a1 > 0 else "ScottBlair"
        for alpha in (0.3, 0.5, 0.7):
            f = Constant(alpha)
            g = relaxation_modulus(f, a1, t, cfg).values
            j = creep_compliance(f, a1, t, cfg).values
            g_ref = constant_order_reference(model, "G", alpha, a1, t)
            j_ref = constant_order_reference(model, "J", alpha, a1, t)
            g_err = np.max(np.abs(g - g_ref)) if a1 > 0 else np.max(np.abs(g / g_ref - 1))
            j_err = np.max(np.abs(j / j_ref - 1))
            kind = "abs" if a1 > 0 else "rel"
            checks.append(Check(f"reduction {model} G alpha={alpha} a1={a1:g} ({kind})", g_err, REDUCTION_TOL))
            checks.append(Check(f"reduction {model} J alpha={alpha} a1={a1:g} (rel)", j_err, REDUCTION_TOL))
    return checks


def reciprocity_suite(variants, a1: float) -> list[Check]:
    s = sample_points()
    checks = []
    for f in variants:
        product = s**2 * G_hat_d(f, a1, s) * J_hat_d(f, a1, s)
        err = float(np.max(np.abs(product - 1)))
        checks.append(Check(f"reciprocity {_describe(f)} a1={a1:g} over {s.size} s", err, RECIPROCITY_TOL))
    return checks


def sonine_suite(variants, cfg: InversionConfig) -> list[Check]:
    checks = []
    for f in variants:
        k = build_kernels(f)
        tol = SONINE_TOL_CONSTANT if isinstance(f, Constant) else SONINE_TOL
        for t in (0.5, 1.0, 2.0, 5.0):
            checks.append(Check(f"sonine {_describe(f)} t={t:g}", sonine_residual(k, t, cfg), tol))
    return checks


def inverters_suite(variants, cfg: InversionConfig) -> list[Check]:
    times = (0.5, 1.0, 5.0)
    checks = []
    for f in variants:
        psi = build_kernels(f).psi_hat
        for t in times:
            a = talbot_invert(psi, t, cfg)
            b = stehfest_invert(psi, t, cfg)
            checks.append(Check(f"inverters Psi[{_describe(f)}] t={t:g}", abs(a - b) / abs(a), INVERTER_TOL_KERNEL))
    decay = LaplaceSymbol(lambda s: 1.0 / (s + 1.0), cut_points=(-1.0,), label="1/(s+1)")
    # Gaver-Stehfest cannot reach 1e-6 on exp(-t) beyond t ~ 1 in double precision
    for t in (0.5, 1.0):
        a = talbot_invert(decay, t, cfg)
        b = stehfest_invert(decay, t, cfg)
        checks.append(Check(f"inverters 1/(s+1) t={t:g}", abs(a - b) / abs(a), INVERTER_TOL_EXP))
    return checks


def forward_laplace(f: TransitionFunction, s: float) -> float:
    """``int_0^T exp(-s t) alpha(t) dt`` plus the analytic late-time tail, ``T = 40/s``."""
    horizon = 40.0 / s
    breaks = [f.switch_time] if isinstance(f, ClampedLinear) and f.switch_time < horizon else None
    body, _ = integrate.quad(
        lambda t: math.exp(-s * t) * float(f(t)), 0.0, horizon, points=breaks, limit=400, epsabs=0.0, epsrel=1e-12
    )
    return body + f.limit * math.exp(-s * horizon) / s


def transition_transform_suite(variants) -> list[Check]:
    checks = []
    for f in variants:
        for s in (0.5, 1.0, 2.0, 5.0):
            exact = complex(f.transform(s)).real
            err = abs(forward_laplace(f, s) / exact - 1)
            checks.append(Check(f"transform {_describe(f)} s={s:g}", err, TRANSFORM_TOL))
    return checks


def run_suite(name: str, transition: TransitionFunction | None, a1: float, cfg: InversionConfig) -> list[Check]:
    if name == "reduction":
        return reduction_suite(cfg)
    if name == "reciprocity":
        return reciprocity_suite([transition] if transition else DEFAULT_VARIANTS, a1)
    if name == "sonine":
        return sonine_suite([transition] if transition else [EXP_FAST, Constant(0.5)], cfg)
    if name == "inverters":
        return inverters_suite([transition] if transition else [EXP_FAST], cfg)
    if name == "transition-transform":
        return transition_transform_suite([transition] if transition else DEFAULT_VARIANTS)
    raise ValueError(f"unknown suite {name!r}")
