"""Weighted unilateral shift models.

A ShiftModel carries a weight sequence (closed-form or tabulated) together
with its limit value.  It can be materialized as a finite truncation, but the
exact infinite-model self-commutator data comes from closed forms, never from
truncations: the finite self-commutator is always traceless, so truncating
before commuting destroys every trace identity.  All trace and rank claims
therefore go through exact_commutator_diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidDimension, NoLimitDeclared

KIND_UNILATERAL = "unilateral"
KIND_RATIONAL = "rational"
KIND_TABULATED = "tabulated"


@dataclass(frozen=True)
class WeightSequence:
    """Shift weights w_0, w_1, ... with a declared limit w_inf.

    kinds:
      unilateral  w_n = 1
      rational    w_n = (n+1)/(n+lam), lam > 1 (strictly increasing, sup 1)
      tabulated   finite list, constant equal to the declared limit beyond it
    """

    kind: str
    lam: float | None = None
    table: tuple[float, ...] = field(default=())
    limit: float | None = None

    def __post_init__(self):
        if self.kind == KIND_UNILATERAL:
            object.__setattr__(self, "limit", 1.0)
        elif self.kind == KIND_RATIONAL:
            if self.lam is None or self.lam <= 1.0:
                raise ValueError("rational weight family requires lam > 1")
            object.__setattr__(self, "limit", 1.0)
        elif self.kind == KIND_TABULATED:
            if not self.table:
                raise ValueError("tabulated weights need a non-empty table")
            if any(w <= 0 for w in self.table):
                raise ValueError("weights must be positive")
            if self.limit is not None and self.limit <= 0:
                raise ValueError("declared limit must be positive")
        else:
            raise ValueError(f"unknown weight kind {self.kind!r}")

    def weight(self, n: int) -> float:
        if self.kind == KIND_UNILATERAL:
            return 1.0
        if self.kind == KIND_RATIONAL:
            return (n + 1) / (n + self.lam)
        if n < len(self.table):
            return self.table[n]
        if self.limit is None:
            raise NoLimitDeclared(
                f"tabulated sequence of length {len(self.table)} has no declared "
                f"limit; cannot extend to index {n}"
            )
        return self.limit

    def weights(self, n: int) -> np.ndarray:
        return np.array([self.weight(k) for k in range(n)])

    @property
    def sup(self) -> float:
        if self.kind == KIND_UNILATERAL or self.kind == KIND_RATIONAL:
            return 1.0
        vals = list(self.table)
        if self.limit is not None:
            vals.append(self.limit)
        return max(vals)


def unilateral() -> WeightSequence:
    return WeightSequence(KIND_UNILATERAL)


def rational_family(lam: float) -> WeightSequence:
    return WeightSequence(KIND_RATIONAL, lam=lam)


def tabulated(weights, limit: float | None = None) -> WeightSequence:
    return WeightSequence(KIND_TABULATED, table=tuple(float(w) for w in weights), limit=limit)


@dataclass(frozen=True)
class ShiftModel:
    weights: WeightSequence

    @property
    def declared_norm(self) -> float:
        return self.weights.sup


def shift_model(weights: WeightSequence) -> ShiftModel:
    return ShiftModel(weights)


def materialize(model: ShiftModel, n: int) -> np.ndarray:
    """N x N truncation: entry (k+1, k) = w_k, zero elsewhere.  Nilpotent."""
    if n < 2:
        raise InvalidDimension(f"truncation dimension must be >= 2, got {n}")
    m = np.zeros((n, n), dtype=np.complex128)
    for k in range(n - 1):
        m[k + 1, k] = model.weights.weight(k)
    return m


def exact_commutator_diagonal(model: ShiftModel, n: int) -> np.ndarray:
    """First n diagonal entries of the INFINITE operator's [T*, T].

    (w_0^2, w_1^2 - w_0^2, ..., w_{n-1}^2 - w_{n-2}^2); partial sums telescope
    to w_{n-1}^2 exactly.  This is the quantity every trace identity uses; the
    finite truncation's commutator is traceless and must not be summed.
    """
    if n < 1:
        raise InvalidDimension(f"need n >= 1, got {n}")
    w2 = model.weights.weights(n) ** 2
    diag = np.empty(n)
    diag[0] = w2[0]
    diag[1:] = w2[1:] - w2[:-1]
    return diag


def symbol_curve(model: ShiftModel, samples: int) -> np.ndarray:
    """Essential-spectrum circle w_inf * exp(2 pi i k / samples), k = 0..samples-1."""
    if samples < 3:
        raise ValueError(f"need at least 3 samples, got {samples}")
    w_inf = model.weights.limit
    if w_inf is None:
        raise NoLimitDeclared("tabulated sequence has no declared limit")
    k = np.arange(samples)
    return w_inf * np.exp(2j * np.pi * k / samples)
