"""Gamma and one-parameter Mittag-Leffler functions on the real half-line.

Only the completely monotone branch ``E_beta(z)``, ``0 < beta <= 1``,
``z <= 0`` is supported. Small arguments use the power series; when the
series would lose accuracy to cancellation the value is obtained instead by
inverting ``s**(beta-1) / (s**beta + lam)`` at ``t = 1``.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as sp

from .errors import DomainError, NumericalFailure
from .inversion import DEFAULT_CONFIG, InversionConfig, LaplaceSymbol, principal_power, talbot_invert

SERIES_RADIUS = 5.0
# series is used only while sum|terms| / |sum| stays below this
_SERIES_MAX_CONDITION = 1e3
_SERIES_TOL = 1e-15
_SERIES_MAX_TERMS = 5000
_LOG_TERM_LIMIT = 700.0


def gamma_fn(x):
    """Gamma function for strictly positive (real) arguments."""
    x_arr = np.asarray(x, dtype=float)
    if np.any(~(x_arr > 0)):
        raise DomainError(f"gamma_fn requires x > 0, got {x}")
    out = sp.gamma(x_arr)
    return float(out) if out.ndim == 0 else out


def _check_beta(beta):
    if not (0 < beta <= 1):
        raise DomainError(f"Mittag-Leffler parameter beta must lie in (0, 1], got {beta}")


def mittag_leffler_series(beta: float, z: float) -> tuple[float, float]:
    """Sum the power series of ``E_beta(z)``.

    Returns ``(value, condition)`` where ``condition`` is
    ``sum|term_k| / |value|``, the factor by which rounding errors in the
    individual terms are amplified.
    """
    _check_beta(beta)
    if z == 0:
        return 1.0, 1.0
    log_abs = math.log(abs(z))
    sign = -1.0 if z < 0 else 1.0
    total = 1.0
    abs_total = 1.0
    prev = 1.0
    for k in range(1, _SERIES_MAX_TERMS):
        log_term = k * log_abs - math.lgamma(beta * k + 1.0)
        if log_term > _LOG_TERM_LIMIT:
            raise NumericalFailure(
                f"Mittag-Leffler series terms overflow for beta={beta}, z={z} (log term {log_term:.1f} at k={k})"
            )
        term = math.exp(log_term)
        total += sign**k * term
        abs_total += term
        if term <= prev and term <= _SERIES_TOL * abs(total):
            break
        prev = term
    else:
        raise NumericalFailure(
            f"Mittag-Leffler series did not converge for beta={beta}, z={z} "
            f"after {_SERIES_MAX_TERMS} terms (last partial sum {total:.6e})"
        )
    if total == 0 or not math.isfinite(total):
        raise NumericalFailure(f"Mittag-Leffler series broke down for beta={beta}, z={z}")
    return total, abs_total / abs(total)


def relaxation_symbol(beta: float, lam: float) -> LaplaceSymbol:
    """Transform ``s**(beta-1)/(s**beta + lam)`` of ``E_beta(-lam t**beta)``."""
    _check_beta(beta)
    cut = (-lam,) if beta == 1 and lam > 0 else ()

    def func(s):
        return 1.0 / (s + lam * principal_power(s, 1.0 - beta))

    return LaplaceSymbol(func, cut_points=cut, label=f"ML relaxation beta={beta} lam={lam}")


def mittag_leffler_laplace(beta: float, z: float, cfg: InversionConfig = DEFAULT_CONFIG) -> float:
    """``E_beta(z)`` for ``z <= 0`` by Talbot inversion of its relaxation transform."""
    if z > 0:
        raise DomainError("Laplace route only covers z <= 0")
    return talbot_invert(relaxation_symbol(beta, -z), 1.0, cfg)


def _ml_scalar(beta, z, cfg):
    if z == 0:
        return 1.0
    if beta == 1:
        return math.exp(z)
    if -z <= SERIES_RADIUS:
        try:
            value, cond = mittag_leffler_series(beta, z)
        except NumericalFailure:
            cond = math.inf
        if cond <= _SERIES_MAX_CONDITION:
            return value
    return mittag_leffler_laplace(beta, z, cfg)


def mittag_leffler(beta: float, z, cfg: InversionConfig = DEFAULT_CONFIG):
    """One-parameter Mittag-Leffler function ``E_beta(z)``.

    Parameters
    ----------
    beta : float
        In ``(0, 1]``.
    z : float or array_like
        Non-positive argument(s).

    Returns
    -------
    float or ndarray
        Values in ``(0, 1]``.
    """
    _check_beta(beta)
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr > 0) or not np.all(np.isfinite(z_arr)):
        raise DomainError("mittag_leffler is implemented for finite z <= 0 only")
    out = np.array([_ml_scalar(beta, float(zi), cfg) for zi in z_arr.ravel()]).reshape(z_arr.shape)
    return float(out) if out.ndim == 0 else out
