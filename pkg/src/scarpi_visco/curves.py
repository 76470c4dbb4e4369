"""Sampled curves with a record of how they were produced."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalFailure

QUANTITIES = frozenset(
    {"Gd", "Jd", "Jstar", "psi", "phi", "alpha", "stress", "strain"}
    | {"Gref_alpha1", "Gref_alpha2", "Jref_alpha1", "Jref_alpha2"}
)


def check_grid(t_grid, allow_zero=False):
    """Return ``t_grid`` as a float array after checking it is positive and increasing."""
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size == 0:
        raise DomainError("time grid must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(t)) or np.any(t < 0) or (not allow_zero and np.any(t == 0)):
        raise DomainError("time grid must be finite and strictly positive")
    if np.any(np.diff(t) <= 0):
        raise DomainError("time grid must be strictly increasing")
    return t


@dataclass(frozen=True)
class CurveSamples:
    t_grid: np.ndarray
    values: np.ndarray
    quantity_label: str
    params_echo: str = ""

    def __post_init__(self):
        t = check_grid(self.t_grid, allow_zero=True)
        v = np.asarray(self.values, dtype=float)
        if v.shape != t.shape:
            raise DomainError(f"{t.size} times but {v.size} values")
        if not np.all(np.isfinite(v)):
            raise NumericalFailure(f"non-finite {self.quantity_label} values")
        if self.quantity_label not in QUANTITIES:
            raise DomainError(f"unknown quantity label {self.quantity_label!r}")
        object.__setattr__(self, "t_grid", t)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.t_grid.size
