"""Scarpi variable-order integral and derivative kernels.

For an order law with transform ``A(s)`` the integral kernel has transform
``Psi(s) = s**(-s A(s))`` and the derivative kernel ``Phi(s) = s**(s A(s) - 1)``.
Their product is ``1/s``, so in time ``psi * phi = 1`` (a Sonine pair). The
time-domain kernels are only available pointwise via numerical inversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import CurveSamples, check_grid
from .errors import NumericalFailure
from .inversion import DEFAULT_CONFIG, InversionConfig, LaplaceSymbol, principal_power, talbot_invert
from .transition import TransitionFunction, require_valid

_GAUSS_POINTS = 12
_GRADING_LEVELS = 20
_SMALLEST_NODE = 1e-6


def order_power(f: TransitionFunction, s):
    """``s**(s A(s))``, the symbol of the variable-order derivative."""
    s = np.asarray(s, dtype=complex)
    return principal_power(s, s * f.transform(s))


@dataclass(frozen=True)
class KernelPair:
    transition: TransitionFunction
    psi_hat: LaplaceSymbol
    phi_hat: LaplaceSymbol

    def symbol(self, which: str) -> LaplaceSymbol:
        if which == "psi":
            return self.psi_hat
        if which == "phi":
            return self.phi_hat
        raise ValueError(f"kernel must be 'psi' or 'phi', got {which!r}")


def build_kernels(f: TransitionFunction) -> KernelPair:
    """Laplace-domain kernels of the Scarpi integral and derivative for ``f``."""
    require_valid(f)
    cuts, growth = f.cut_points, f.left_growth

    def psi(s):
        return principal_power(s, -s * f.transform(s))

    def phi(s):
        return principal_power(s, s * f.transform(s) - 1.0)

    return KernelPair(
        transition=f,
        psi_hat=LaplaceSymbol(psi, cut_points=cuts, label=f"Psi[{f.kind}]", left_growth=growth),
        phi_hat=LaplaceSymbol(phi, cut_points=cuts, label=f"Phi[{f.kind}]", left_growth=growth),
    )


def _echo(k: KernelPair, cfg: InversionConfig, **extra):
    items = {"transition": k.transition.kind, **k.transition.params(), **extra}
    items["nodes"] = cfg.node_count
    items["contour_scale"] = cfg.contour_scale
    return " ".join(f"{key}={val}" for key, val in items.items())


def _invert_labelled(F, t, cfg):
    try:
        return talbot_invert(F, t, cfg)
    except NumericalFailure as exc:
        raise NumericalFailure(f"{F.label} inversion failed: {exc}") from exc


def kernel_time_values(
    k: KernelPair, which: str, t_grid, cfg: InversionConfig = DEFAULT_CONFIG
) -> CurveSamples:
    """Time-domain ``psi(t)`` or ``phi(t)`` on a positive increasing grid."""
    t = check_grid(t_grid)
    values = _invert_labelled(k.symbol(which), t, cfg)
    return CurveSamples(t, values, which, _echo(k, cfg))


def _graded_half(length):
    """Gauss nodes/weights on ``[h, length]`` graded geometrically towards 0.

    Returns ``(nodes, weights, h)`` where ``h`` is the inner edge left to the
    power-law correction.
    """
    levels = min(_GRADING_LEVELS, int(math.floor(math.log2(length / _SMALLEST_NODE))))
    levels = max(levels, 1)
    edges = length * 0.5 ** np.arange(levels, -1, -1)
    x, w = np.polynomial.legendre.leggauss(_GAUSS_POINTS)
    lo, hi = edges[:-1, None], edges[1:, None]
    nodes = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
    weights = 0.5 * (hi - lo) * w
    return nodes.ravel(), weights.ravel(), edges[0]


def sonine_residual(k: KernelPair, t: float, cfg: InversionConfig = DEFAULT_CONFIG) -> float:
    """``|(psi * phi)(t) - 1|`` by graded product quadrature.

    The interval is split at ``t/2``. Each half is covered by geometric cells
    (ratio 1/2) towards its singular endpoint with Gauss-Legendre nodes in
    every cell; the mass below the innermost node is integrated from the
    leading power law ``u**(alpha0 - 1)`` (psi side) or ``u**(-alpha0)``
    (phi side), with ``alpha0 = alpha(0+)``.
    """
    if not t > 0:
        raise ValueError("sonine_residual needs t > 0")
    alpha0 = k.transition.initial
    u, w, h = _graded_half(t / 2)
    # left half: tau = u, psi singular; right half: tau = t - u, phi singular
    small = np.concatenate([u, [h]])
    big = t - small
    psi_small = _invert_labelled(k.psi_hat, small, cfg)
    phi_big = _invert_labelled(k.phi_hat, big, cfg)
    phi_small = _invert_labelled(k.phi_hat, small, cfg)
    psi_big = _invert_labelled(k.psi_hat, big, cfg)
    left = psi_small * phi_big
    right = phi_small * psi_big

    total = np.dot(w, left[:-1]) + np.dot(w, right[:-1])
    # power-law mass on [0, h] anchored at u = h
    p_left = alpha0 - 1.0
    p_right = -alpha0
    total += left[-1] * h / (p_left + 1.0)
    total += right[-1] * h / (p_right + 1.0)
    if not math.isfinite(total):
        raise NumericalFailure(f"Sonine quadrature produced {total} at t={t:g}")
    return abs(total - 1.0)


def derivative_transform(k: KernelPair, F: LaplaceSymbol, f0: float, s):
    """Laplace transform of the Scarpi derivative of ``f``: ``s**(sA) F(s) - Phi(s) f(0+)``."""
    s = np.asarray(s, dtype=complex)
    return order_power(k.transition, s) * F(s) - k.phi_hat(s) * f0


def integral_transform(k: KernelPair, F: LaplaceSymbol, s):
    """Laplace transform of the Scarpi integral of ``f``: ``Psi(s) F(s)``."""
    s = np.asarray(s, dtype=complex)
    return k.psi_hat(s) * F(s)
