"""Generic envelope-theory solver.

The approximation reduces the N-body eigenvalue problem to three
coupled equations for the energy E, an optimum radius r0 and an optimum
momentum p0:

    E = N T(p0) + N U(r0/N) + C V(r0/sqrt(C)),      C = N(N-1)/2
    r0 p0 = Q
    N p0 T'(p0) = r0 U'(r0/N) + sqrt(C) r0 V'(r0/sqrt(C))

Eliminating p0 = Q/r0 turns the third equation into a single scalar
root-finding problem in r0, which is what this module solves.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import brentq

from .errors import AmbiguousSolution, ConvergenceError, NoSolution
from .model import Bound, EtSolution, SystemSpec

__all__ = ["solve_radius", "energy", "BRACKET_LO", "BRACKET_HI"]

# search range for the optimum radius, in natural units
BRACKET_LO = 1e-6
BRACKET_HI = 1e6
_POINTS_PER_DECADE = 80

# |lhs - rhs| at the accepted root must not exceed this fraction of the
# larger side of the stationarity equation
_RESIDUAL_RTOL = 1e-10


def _sides(spec: SystemSpec, q: float, r: float) -> tuple[float, float]:
    """Left and right side of the stationarity equation at radius r."""
    p = q / r
    root_c = math.sqrt(spec.pair_count)
    lhs = spec.N * p * spec.kinetic.d1(p)
    rhs = r * spec.onebody.d1(r / spec.N) + root_c * r * spec.pairwise.d1(r / root_c)
    return lhs, rhs


def _mismatch(spec: SystemSpec, q: float, r: float) -> float:
    lhs, rhs = _sides(spec, q, r)
    return lhs - rhs


def _energy_at(spec: SystemSpec, q: float, r0: float) -> float:
    p0 = q / r0
    root_c = math.sqrt(spec.pair_count)
    return (
        spec.N * spec.kinetic.value(p0)
        + spec.N * spec.onebody.value(r0 / spec.N)
        + spec.pair_count * spec.pairwise.value(r0 / root_c)
    )


def _scan_brackets(spec: SystemSpec, q: float) -> list[tuple[float, float]]:
    """Sign-change intervals of the stationarity mismatch on a log grid."""
    decades = math.log10(BRACKET_HI / BRACKET_LO)
    grid = np.geomspace(BRACKET_LO, BRACKET_HI, int(decades * _POINTS_PER_DECADE) + 1)
    brackets: list[tuple[float, float]] = []
    prev_r = prev_f = None
    for r in grid:
        try:
            f = _mismatch(spec, q, float(r))
        except (OverflowError, ValueError, ZeroDivisionError):
            f = math.nan
        if not math.isfinite(f):
            prev_r = prev_f = None
            continue
        if f == 0.0:
            brackets.append((float(r), float(r)))
        elif prev_f is not None and (f < 0.0) != (prev_f < 0.0):
            brackets.append((prev_r, float(r)))
        prev_r, prev_f = float(r), f
    return brackets


def _refine(spec: SystemSpec, q: float, lo: float, hi: float) -> float:
    if lo == hi:
        return lo
    try:
        return float(
            brentq(
                lambda r: _mismatch(spec, q, r),
                lo,
                hi,
                rtol=4.0 * np.finfo(float).eps,
                maxiter=200,
            )
        )
    except (RuntimeError, ValueError) as exc:
        raise ConvergenceError(
            f"root refinement failed on [{lo:.6g}, {hi:.6g}]: {exc}"
        ) from exc


def _check_residual(spec: SystemSpec, q: float, r0: float) -> None:
    lhs, rhs = _sides(spec, q, r0)
    scale = max(abs(lhs), abs(rhs), 1e-300)
    if abs(lhs - rhs) > _RESIDUAL_RTOL * scale:
        raise ConvergenceError(
            f"stationarity residual {abs(lhs - rhs):.3e} exceeds "
            f"{_RESIDUAL_RTOL:.0e} * {scale:.3e} at r0={r0:.6g}"
        )


def _select(spec: SystemSpec, q: float, roots: list[float],
            brackets_for_error: list[tuple[float, float]] | None = None) -> float:
    if len(roots) == 1:
        return roots[0]
    # Several stationary points: a variational tag gives a principled
    # tie-break (best upper bound = smallest E, best lower bound =
    # largest E).  Without one we refuse to guess.
    if spec.bound is Bound.UPPER:
        return min(roots, key=lambda r: _energy_at(spec, q, r))
    if spec.bound is Bound.LOWER:
        return max(roots, key=lambda r: _energy_at(spec, q, r))
    pairs = brackets_for_error or [(r, r) for r in roots]
    raise AmbiguousSolution(
        f"{len(roots)} stationary radii found for {spec.label} at q={q:.6g} "
        f"and no variational tag selects one: "
        + ", ".join(f"[{a:.6g}, {b:.6g}]" for a, b in pairs),
        brackets=pairs,
    )


def solve_radius(spec: SystemSpec, q) -> float:
    """Optimum radius r0 for collective number q.

    Scans [1e-6, 1e6] on a log grid for sign changes of the
    stationarity mismatch, refines each with Brent's method, and
    applies the variational selection rule if several roots exist.
    """
    q = float(q)
    if not math.isfinite(q) or q <= 0.0:
        raise NoSolution(f"collective number must be positive, got {q!r}")
    brackets = _scan_brackets(spec, q)
    if not brackets:
        raise NoSolution(
            f"no stationary radius in [{BRACKET_LO:g}, {BRACKET_HI:g}] for "
            f"{spec.label} at q={q:.6g}; the system may not bind at this q"
        )
    roots = [_refine(spec, q, lo, hi) for lo, hi in brackets]
    for r0 in roots:
        _check_residual(spec, q, r0)
    return _select(spec, q, roots, brackets)


def energy(spec: SystemSpec, q) -> EtSolution:
    """Solve the three envelope equations at collective number q.

    Returns the full solution point; the bound tag is copied from the
    system's catalogue entry (NONE for hand-built systems).
    """
    q = float(q)
    r0 = solve_radius(spec, q)
    p0 = q / r0
    return EtSolution(
        E=_energy_at(spec, q, r0), r0=r0, p0=p0, q_used=q, bound=spec.bound
    )
