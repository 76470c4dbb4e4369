"""Order laws ``alpha(t)`` and their exact Laplace transforms ``A(s)``.

Four families are available:

``Constant(alpha)``
    The constant-order limit, ``A(s) = alpha / s``.
``Exponential(alpha1, alpha2, c)``
    ``alpha2 + (alpha1 - alpha2) exp(-c t)``.
``MittagLefflerTransition(alpha1, alpha2, c, beta)``
    ``alpha2 + (alpha1 - alpha2) E_beta(-c t**beta)``.
``ClampedLinear(a, b, delta)``
    ``a t + b`` up to ``(1 - b)/a - delta``, then held at ``1 - delta a``.

Instances are immutable and are not validated on construction; call
:func:`validate` (or :func:`require_valid`) to obtain the list of violated
admissibility conditions.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DomainError, ValidationError
from .inversion import principal_power
from .special import mittag_leffler

BOUNDED = "order bounded in (0, 1)"
INITIAL = "initial order alpha(0+) in (0, 1)"
TRANSFORM = "locally integrable with explicit Laplace transform"


@dataclass(frozen=True)
class Violation:
    field: str
    condition: str
    message: str

    def __str__(self):
        return f"{self.message} [{self.condition}]"


def _unit_interval(name, value, conditions):
    if not (0 < value < 1):
        return [Violation(name, cond, f"{name} out of (0,1): {value:g}") for cond in conditions]
    return []


def _positive(name, value, condition):
    if not (value > 0 and math.isfinite(value)):
        return [Violation(name, condition, f"{name} must be positive: {value:g}")]
    return []


def _zero_check(s, mask, what):
    if np.any(mask):
        raise DomainError(f"A(s) is singular at {what}")


class TransitionFunction:
    """Common interface of the order laws."""

    kind: str = ""

    def __call__(self, t):
        raise NotImplementedError

    def transform(self, s):
        raise NotImplementedError

    @property
    def initial(self) -> float:
        """``alpha(0+)``."""
        raise NotImplementedError

    @property
    def limit(self) -> float:
        """``alpha(t)`` as ``t -> infinity``."""
        raise NotImplementedError

    @property
    def cut_points(self) -> tuple[float, ...]:
        """Singularities of ``A(s)`` on the negative real axis besides ``s = 0``."""
        return ()

    @property
    def left_growth(self) -> float:
        """Rate ``g`` of any ``exp(-g s)`` factor in ``A(s)``."""
        return 0.0

    def violations(self) -> list[Violation]:
        raise NotImplementedError

    def params(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Constant(TransitionFunction):
    alpha: float
    kind = "const"

    def __call__(self, t):
        return np.full_like(np.asarray(t, dtype=float), self.alpha)[()]

    def transform(self, s):
        s = np.asarray(s, dtype=complex)
        _zero_check(s, s == 0, "s = 0")
        return (self.alpha / s)[()]

    @property
    def initial(self):
        return self.alpha

    @property
    def limit(self):
        return self.alpha

    def violations(self):
        return _unit_interval("alpha", self.alpha, (BOUNDED, INITIAL))


@dataclass(frozen=True)
class Exponential(TransitionFunction):
    alpha1: float
    alpha2: float
    c: float
    kind = "exp"

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return (self.alpha2 + (self.alpha1 - self.alpha2) * np.exp(-self.c * t))[()]

    def transform(self, s):
        s = np.asarray(s, dtype=complex)
        _zero_check(s, s == 0, "s = 0")
        _zero_check(s, s == -self.c, f"s = -c = {-self.c:g}")
        return ((self.alpha2 * self.c + self.alpha1 * s) / (s * (self.c + s)))[()]

    @property
    def initial(self):
        return self.alpha1

    @property
    def limit(self):
        return self.alpha2

    @property
    def cut_points(self):
        return (-self.c,) if self.c > 0 else ()

    def violations(self):
        return (
            _unit_interval("alpha1", self.alpha1, (BOUNDED, INITIAL))
            + _unit_interval("alpha2", self.alpha2, (BOUNDED,))
            + _positive("c", self.c, BOUNDED)
        )


@dataclass(frozen=True)
class MittagLefflerTransition(TransitionFunction):
    alpha1: float
    alpha2: float
    c: float
    beta: float
    kind = "ml"

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        relax = mittag_leffler(self.beta, -self.c * t**self.beta)
        return np.asarray(self.alpha2 + (self.alpha1 - self.alpha2) * relax)[()]

    def transform(self, s):
        s = np.asarray(s, dtype=complex)
        _zero_check(s, s == 0, "s = 0")
        sb = principal_power(s, self.beta)
        denom = self.c + sb
        # zeros of s**beta + c do not exist on the principal sheet for beta < 1
        _zero_check(s, np.abs(denom) == 0, f"a zero of s**beta + c (c = {self.c:g})")
        return ((self.alpha2 * self.c + self.alpha1 * sb) / (s * denom))[()]

    @property
    def initial(self):
        return self.alpha1

    @property
    def limit(self):
        return self.alpha2

    def violations(self):
        out = (
            _unit_interval("alpha1", self.alpha1, (BOUNDED, INITIAL))
            + _unit_interval("alpha2", self.alpha2, (BOUNDED,))
            + _positive("c", self.c, BOUNDED)
        )
        if not (0 < self.beta < 1):
            out.append(Violation("beta", TRANSFORM, f"beta out of (0,1): {self.beta:g}"))
        return out


@dataclass(frozen=True)
class ClampedLinear(TransitionFunction):
    """Linear ramp ``a t + b`` clamped at ``1 - delta a`` once it nears 1.

    ``delta`` defaults to one percent of the unclamped crossing time
    ``(1 - b)/a``.
    """

    a: float
    b: float
    delta: float | None = field(default=None)
    kind = "clamped"

    def __post_init__(self):
        if self.delta is None and self.a > 0 and self.b < 1:
            object.__setattr__(self, "delta", 0.01 * (1 - self.b) / self.a)

    @property
    def switch_time(self) -> float:
        """Time at which the ramp is clamped."""
        return (1 - self.b) / self.a - self.delta

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return np.where(t <= self.switch_time, self.a * t + self.b, self.limit)[()]

    def transform(self, s):
        s = np.asarray(s, dtype=complex)
        _zero_check(s, s == 0, "s = 0")
        ramp = -np.expm1(-self.switch_time * s)
        return (self.b / s + self.a / s**2 * ramp)[()]

    @property
    def initial(self):
        return self.b

    @property
    def limit(self):
        return 1 - self.delta * self.a

    @property
    def left_growth(self):
        return self.switch_time

    def violations(self):
        out = _positive("a", self.a, BOUNDED) + _unit_interval("b", self.b, (BOUNDED, INITIAL))
        if out:
            return out
        if self.delta is None or not self.delta > 0:
            out.append(Violation("delta", BOUNDED, f"delta must be positive: {self.delta}"))
        elif self.delta >= (1 - self.b) / self.a:
            out.append(
                Violation(
                    "delta",
                    BOUNDED,
                    f"delta >= (1-b)/a: {self.delta:g} >= {(1 - self.b) / self.a:g}",
                )
            )
        elif not (0 < self.limit < 1):
            out.append(Violation("delta", BOUNDED, f"plateau 1 - delta*a out of (0,1): {self.limit:g}"))
        return out


VARIANTS = {cls.kind: cls for cls in (Constant, Exponential, MittagLefflerTransition, ClampedLinear)}


def alpha_at(f: TransitionFunction, t):
    """Evaluate the order law at ``t >= 0``."""
    if np.any(np.asarray(t) < 0):
        raise DomainError("alpha_at requires t >= 0")
    return f(t)


def laplace_A(f: TransitionFunction, s):
    """Exact Laplace transform ``A(s)`` of the order law."""
    return f.transform(s)


def validate(f: TransitionFunction) -> list[Violation]:
    """Return the admissibility violations of ``f`` (empty when admissible)."""
    return f.violations()


def require_valid(f: TransitionFunction) -> TransitionFunction:
    problems = validate(f)
    if problems:
        raise ValidationError(
            f"inadmissible {f.kind} transition: " + "; ".join(str(v) for v in problems), problems
        )
    return f


def from_params(kind: str, params: dict) -> TransitionFunction:
    """Build a transition from its config-file representation."""
    try:
        if kind == "const":
            return Constant(float(params["alpha"]))
        if kind == "exp":
            return Exponential(float(params["alpha1"]), float(params["alpha2"]), float(params["c"]))
        if kind == "ml":
            return MittagLefflerTransition(
                float(params["alpha1"]), float(params["alpha2"]), float(params["c"]), float(params["beta"])
            )
        if kind == "clamped":
            delta = params.get("delta")
            return ClampedLinear(
                float(params["a"]), float(params["b"]), None if delta is None else float(delta)
            )
    except KeyError as exc:
        raise ValidationError(f"missing required field {exc.args[0]} for transition {kind!r}") from None
    raise ValidationError(f"unknown transition {kind!r}; expected one of {sorted(VARIANTS)}")


def to_params(f: TransitionFunction) -> dict:
    return dict(f.params())
