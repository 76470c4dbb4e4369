"""Complex powers and numerical inversion of Laplace transforms.

Two inverters are provided:

* :func:`talbot_invert` -- trapezoidal rule on the optimised cotangent contour
  of Weideman & Trefethen (2007). Geometrically convergent for transforms that
  are analytic off the negative real axis; this is the production path.
* :func:`stehfest_invert` -- the Gaver-Stehfest formula. It samples only real
  ``s > 0`` and is accurate to roughly 4-7 digits, so it is used purely as an
  independent cross-check.

Transforms are passed around as :class:`LaplaceSymbol` objects that carry the
location of any singularities the contour has to respect.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import ConfigurationError, DomainError, NumericalFailure

# Cotangent contour s(theta) = (N/t) * (SIGMA + MU*theta*cot(ALPHA*theta) + i*NU*theta)
_SIGMA = -0.6122
_MU = 0.5017
_ALPHA = 0.6407
_NU = 0.2645

# exp(x*t) below this is invisible in double precision
_NEGLIGIBLE_LOG = math.log(np.finfo(float).eps)
_MAX_GROWTH = 8
_IMAG_REL_TOL = 1e-8
# largest admissible exponent of exp(-growth * s) on the contour
_MAX_LEFT_EXPONENT = 2.0


@dataclass(frozen=True)
class InversionConfig:
    """Parameters for the Talbot and Gaver-Stehfest inverters.

    Attributes
    ----------
    node_count : int
        Number of Talbot contour nodes ``N`` (at least 8).
    contour_scale : float
        Multiplier on the ``N/t`` contour size.
    oracle_terms : int
        Gaver-Stehfest depth; even, between 8 and 18.
    """

    node_count: int = 32
    contour_scale: float = 1.0
    oracle_terms: int = 14

    def __post_init__(self):
        if int(self.node_count) != self.node_count or self.node_count < 8:
            raise ConfigurationError(f"node_count must be an integer >= 8, got {self.node_count}")
        if not (self.contour_scale > 0 and math.isfinite(self.contour_scale)):
            raise ConfigurationError(f"contour_scale must be positive, got {self.contour_scale}")
        if self.oracle_terms not in range(8, 19, 2):
            raise ConfigurationError(
                f"oracle_terms must be even and in [8, 18], got {self.oracle_terms}"
            )


DEFAULT_CONFIG = InversionConfig()


@dataclass(frozen=True)
class LaplaceSymbol:
    """A Laplace-domain function ``F(s)`` together with its singular set.

    ``func`` must accept numpy arrays of complex ``s`` and return an array of
    the same shape. ``cut_points`` lists isolated singularities lying on the
    negative real axis (other than the branch point at the origin), e.g.
    ``-c`` for the exponential transition. ``left_growth`` is ``g`` when the
    transform contains a factor ``exp(-g s)``, which explodes where the Talbot
    contour wraps into the left half-plane.
    """

    func: Callable[[np.ndarray], np.ndarray]
    singularity_abscissa: float = 0.0
    cut_points: tuple[float, ...] = field(default=())
    label: str = ""
    left_growth: float = 0.0

    def __post_init__(self):
        if not self.left_growth >= 0:
            raise ConfigurationError(f"left_growth must be >= 0, got {self.left_growth}")
        if self.singularity_abscissa > 0:
            raise ConfigurationError(
                "transforms with singularities in the right half-plane are not supported "
                f"(abscissa {self.singularity_abscissa})"
            )
        points = tuple(float(x) for x in self.cut_points)
        if any(x >= 0 for x in points):
            raise ConfigurationError(f"cut points must lie on the negative real axis: {points}")
        object.__setattr__(self, "cut_points", points)

    def __call__(self, s):
        return self.func(np.asarray(s, dtype=complex))


def principal_power(s, w):
    """Return ``s**w`` on the principal branch, ``exp(w * Log s)``.

    The argument of ``s`` is taken in ``(-pi, pi]``; a negative zero imaginary
    part is treated as ``+0`` so that points on the negative real axis get
    argument ``+pi``. Works elementwise on arrays.
    """
    s = np.asarray(s, dtype=complex)
    if np.any(s == 0):
        raise DomainError("principal_power is undefined at the branch point s = 0")
    # -0.0 + 0.0 == +0.0, which pins the branch cut to arg = +pi
    s = s.real + 1j * (s.imag + 0.0)
    out = np.exp(np.asarray(w, dtype=complex) * np.log(s))
    return out[()] if out.ndim == 0 else out


def contour_leftmost(t, node_count, contour_scale=1.0):
    """Leftmost real extent of the cotangent contour at time ``t``."""
    edge = _SIGMA + _MU * math.pi / math.tan(_ALPHA * math.pi)
    return contour_scale * node_count / t * edge


def _contour(t, node_count, scale):
    # midpoint nodes in (-pi, pi); theta = 0 only occurs for odd N
    theta = -math.pi + (np.arange(node_count) + 0.5) * (2 * math.pi / node_count)
    centre = np.abs(theta) < 1e-12
    safe = np.where(centre, 1.0, theta)
    cot = 1.0 / np.tan(_ALPHA * safe)
    shape = np.where(centre, 1.0 / _ALPHA, safe * cot)
    slope = np.where(centre, 0.0, cot - _ALPHA * safe / np.sin(_ALPHA * safe) ** 2)
    r = np.asarray(scale * node_count / t)[..., None]
    z = r * (_SIGMA + _MU * shape + 1j * _NU * theta)
    dz = r * (_MU * slope + 1j * _NU)
    return z, dz


def _resolve_nodes(F, t, cfg):
    """Pick a node count that keeps every cut point harmless at time ``t``.

    A cut point ``x`` is harmless when the contour wraps around it or when its
    time-domain contribution ``exp(x t)`` is below double-precision resolution.
    Otherwise the contour is enlarged, up to a factor of 8, by raising the node
    count (the contour size is proportional to N/t). Stretching the contour at
    fixed N instead would wreck the trapezoidal rule.
    """
    nodes = cfg.node_count
    for x in F.cut_points:
        if x * t <= _NEGLIGIBLE_LOG:
            continue
        while contour_leftmost(t, nodes, cfg.contour_scale) >= x:
            if nodes >= cfg.node_count * _MAX_GROWTH:
                raise ConfigurationError(
                    f"Talbot contour at t={t:g} cannot enclose the singularity at s={x:g} "
                    f"(leftmost extent {contour_leftmost(t, nodes, cfg.contour_scale):g} "
                    f"with {nodes} nodes); raise node_count"
                )
            nodes *= 2
    if F.left_growth > 0:
        reach = -contour_leftmost(t, nodes, cfg.contour_scale)
        if F.left_growth * reach > _MAX_LEFT_EXPONENT:
            t_ok = F.left_growth * reach * t / _MAX_LEFT_EXPONENT
            raise ConfigurationError(
                f"{F.label or 'transform'} grows like exp({F.left_growth:g}|s|) in the left half-plane; "
                f"the Talbot contour at t={t:g} reaches Re s={-reach:g}, usable only for t >= {t_ok:.4g} "
                f"with {nodes} nodes"
            )
    return nodes


def _talbot_batch(F, t_arr, nodes, scale):
    z, dz = _contour(t_arr, nodes, scale)
    with np.errstate(over="ignore", invalid="ignore"):
        terms = np.exp(z * t_arr[:, None]) * F(z) * dz
    bad = ~np.all(np.isfinite(terms), axis=1)
    if np.any(bad):
        t_bad = t_arr[np.argmax(bad)]
        raise NumericalFailure(f"non-finite Talbot summand for {F.label or 'transform'} at t={t_bad:g}")
    total = terms.sum(axis=1) / (1j * nodes)
    noise = 1e3 * np.finfo(float).eps * np.abs(terms).sum(axis=1) / nodes
    spurious = np.abs(total.imag) > _IMAG_REL_TOL * np.abs(total.real) + noise
    if np.any(spurious):
        i = int(np.argmax(spurious))
        raise NumericalFailure(
            f"Talbot sum for {F.label or 'transform'} at t={t_arr[i]:g} has imaginary part "
            f"{total.imag[i]:.3e} against real part {total.real[i]:.3e}"
        )
    return total.real


def talbot_invert(F: LaplaceSymbol, t, cfg: InversionConfig = DEFAULT_CONFIG):
    """Invert ``F`` at time(s) ``t`` on the cotangent Talbot contour.

    Parameters
    ----------
    F : LaplaceSymbol
        Transform of a real-valued time function.
    t : float or array_like
        Strictly positive time(s). Each time gets its own contour.
    cfg : InversionConfig, optional

    Returns
    -------
    float or ndarray
        Real part of the N-node trapezoidal sum. The imaginary part is checked
        against the real part on every call.

    Raises
    ------
    ConfigurationError
        If a cut point can neither be enclosed nor neglected.
    NumericalFailure
        On a non-finite summand or a spurious imaginary part.
    """
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if t_arr.ndim != 1 or np.any(~(t_arr > 0)) or not np.all(np.isfinite(t_arr)):
        raise DomainError("talbot_invert requires finite times t > 0")
    nodes = np.array([_resolve_nodes(F, ti, cfg) for ti in t_arr])
    out = np.empty_like(t_arr)
    for n in np.unique(nodes):
        sel = nodes == n
        out[sel] = _talbot_batch(F, t_arr[sel], int(n), cfg.contour_scale)
    return float(out[0]) if np.ndim(t) == 0 else out


@lru_cache(maxsize=None)
def stehfest_weights(n_terms: int) -> tuple[float, ...]:
    """Gaver-Stehfest weights ``V_1..V_n`` computed in exact integer arithmetic."""
    if n_terms % 2:
        raise ConfigurationError("Gaver-Stehfest needs an even number of terms")
    half = n_terms // 2
    fact = math.factorial
    weights = []
    for k in range(1, n_terms + 1):
        acc = Fraction(0)
        for j in range((k + 1) // 2, min(k, half) + 1):
            num = j**half * fact(2 * j)
            den = fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k)
            acc += Fraction(num, den)
        weights.append((-1) ** (k + half) * float(acc))
    return tuple(weights)


def stehfest_invert(F: LaplaceSymbol, t, cfg: InversionConfig = DEFAULT_CONFIG):
    """Gaver-Stehfest inversion using only real abscissae ``k ln2 / t``."""
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(~(t_arr > 0)):
        raise DomainError("stehfest_invert requires t > 0")
    weights = np.array(stehfest_weights(cfg.oracle_terms))
    k = np.arange(1, cfg.oracle_terms + 1)
    s = (math.log(2) / t_arr)[:, None] * k
    values = np.real(F(s.astype(complex)))
    terms = weights * values
    if not np.all(np.isfinite(terms)):
        raise NumericalFailure(f"non-finite Gaver-Stehfest summand for {F.label or 'transform'}")
    out = math.log(2) / t_arr * terms.sum(axis=1)
    return float(out[0]) if np.ndim(t) == 0 else out
