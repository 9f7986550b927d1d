"""End-to-end experiments: change-of-variable law for the index, constancy
under disc automorphisms, the rational weighted-shift family, resolvent norm
probes, and the scalar inequality (1 - c/r^2) <= (1 - 1/r^2)^c that pins the
constant c = 1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SpectrumHit
from .linalg import adjoint, inner, resolvent_solve
from .mobius import MobiusMap, mobius_eval, mobius_invert
from .principal import principal_value_at, winding_number
from .reporting import Check, make_check
from .shifts import ShiftModel, materialize, symbol_curve

# Default automorphism grid: center, two moduli, two phases.
DEFAULT_MAP_GRID = tuple(
    MobiusMap(beta=b, a=a)
    for b in (1.0, np.exp(1j * np.pi / 7))
    for a in (0.0, 0.3, 0.5 * np.exp(1j * np.pi / 4), 0.7j)
)

DEFAULT_WITNESS_GRID = tuple(1.05 + 0.05 * k for k in range(180))  # 1.05 .. 10.0
WITNESS_MARGIN = 1e-12


@dataclass(frozen=True)
class InequalityProbe:
    c: float
    r: float
    lhs: float  # 1 - c/r^2
    rhs: float  # (1 - 1/r^2)^c


def theorem_inequality_eval(c: float, r: float) -> InequalityProbe:
    if not (0.0 < c <= 1.0):
        raise DomainError(f"c must lie in (0, 1], got {c}")
    if r <= 1.0:
        raise DomainError(f"r must exceed 1, got {r}")
    return InequalityProbe(c=c, r=r, lhs=1.0 - c / r**2, rhs=(1.0 - 1.0 / r**2) ** c)


def witness_search(c: float, r_grid=DEFAULT_WITNESS_GRID) -> float | None:
    """Smallest grid r with 1 - c/r^2 > (1 - 1/r^2)^c + margin, or None.

    A witness exists for every c < 1 (the two sides differ at order r^{-4}
    with a strictly negative coefficient); at c = 1 the two sides coincide
    identically and the search must come up empty.
    """
    for r in r_grid:
        probe = theorem_inequality_eval(c, r)
        if probe.lhs > probe.rhs + WITNESS_MARGIN:
            return float(r)
    return None


def transformed_symbol_curve(model: ShiftModel, phi: MobiusMap, samples: int = 4096) -> np.ndarray:
    """Image of the symbol curve under phi.

    phi(T) - mu is invertible exactly when T - phi^{-1}(mu) is, so the index
    of phi(T) - mu is the winding of the mapped curve; no operator needs to be
    materialized.
    """
    curve = symbol_curve(model, samples)
    return np.array([mobius_eval(phi, z) for z in curve])


def change_of_variable_check(
    model: ShiftModel, phi: MobiusMap, points, samples: int = 4096
) -> list[Check]:
    """Index of phi(T) at zeta vs index of T at phi^{-1}(zeta), integer equality."""
    image = transformed_symbol_curve(model, phi, samples)
    phi_inv = mobius_invert(phi)
    checks = []
    for zeta in points:
        lhs = winding_number(image, zeta)
        rhs = principal_value_at(model, mobius_eval(phi_inv, zeta), samples).g_value
        checks.append(
            make_check(f"index transport at zeta={zeta}", lhs, rhs, 0.0)
        )
    return checks


def constancy_check(
    model: ShiftModel,
    maps=DEFAULT_MAP_GRID,
    interior_points=None,
    exterior_points=None,
    samples: int = 4096,
) -> list[Check]:
    """The index is the same integer at every interior point, across all maps,
    and zero at every exterior point."""
    if interior_points is None:
        interior_points = default_interior_points()
    if exterior_points is None:
        exterior_points = default_exterior_points()
    base = principal_value_at(model, interior_points[0], samples).g_value
    checks = []
    for phi in maps:
        image = transformed_symbol_curve(model, phi, samples)
        for zeta in interior_points:
            checks.append(
                make_check(
                    f"constant index at zeta={zeta}, a={phi.a}", winding_number(image, zeta), base, 0.0
                )
            )
        for zeta in exterior_points:
            checks.append(
                make_check(
                    f"zero index outside at zeta={zeta}, a={phi.a}", winding_number(image, zeta), 0, 0.0
                )
            )
    return checks


def default_interior_points(count: int = 20, radius: float = 0.8):
    """Deterministic spiral of interior sample points, bounded away from the circle."""
    k = np.arange(count)
    return list(radius * (k + 1) / count * np.exp(2j * np.pi * k / count))


def default_exterior_points(count: int = 5, start: float = 1.3):
    k = np.arange(count)
    return list((start + 0.4 * k) * np.exp(2j * np.pi * k / count))


@dataclass(frozen=True)
class ResolventProbe:
    w: complex
    operator_norm: float  # computed norm of (T_n* - conj(w))^{-1}
    spectral_bound: float  # 1/|w|
    distance_bound: float  # 1/(|w| - 1)
    vector_norm: float  # ||(T* - conj(w))^{-1} x|| for the rank-one vector x


def resolvent_norm_probe(model: ShiftModel, w: complex, n: int) -> ResolventProbe:
    """Report the resolvent norm of the truncated adjoint next to both candidate
    bounds, plus the exact rank-one vector norm (1/|w| scaled by w_0 for shifts).

    This probe reports rather than asserts: the two bounds differ and the data
    is the point.
    """
    if abs(w) <= 1.0 + 1e-6:
        raise SpectrumHit(f"|w| must exceed 1, got {abs(w)}")
    t = materialize(model, n)
    shifted = adjoint(t) - np.conj(w) * np.eye(n)
    s = np.linalg.svd(shifted, compute_uv=False)
    op_norm = 1.0 / float(s[-1])
    x = np.zeros(n, dtype=np.complex128)
    x[0] = model.weights.weight(0)
    u = resolvent_solve(adjoint(t), np.conj(w), x)
    return ResolventProbe(
        w=complex(w),
        operator_norm=op_norm,
        spectral_bound=1.0 / abs(w),
        distance_bound=1.0 / (abs(w) - 1.0),
        vector_norm=float(np.sqrt(inner(u, u).real)),
    )


def t_lambda_trace_check(lam: float, n: int) -> Check:
    """Partial trace w_{n-1}(lam)^2 of the rational family against 1, within 2 lam / n.

    All members of the family share principal value 1 on the disc while being
    mutually inequivalent; the trace of the exact self-commutator is the shared
    invariant probed here.
    """
    if lam <= 1.0:
        raise DomainError(f"family parameter must exceed 1, got {lam}")
    w_last = n / (n - 1 + lam)
    return make_check(
        f"partial commutator trace (lam={lam}, n={n})", w_last**2, 1.0, 2.0 * lam / n
    )
