"""Independent two-body eigenvalue oracle (Numerov shooting).

Solves the reduced radial problem

    -u''/(2 mu) + [V(r) + l(l+1)/(2 mu r^2)] u = E u,   u(0) = u(rmax) = 0

by outward Numerov integration with node counting and bisection in E.
Nothing here touches the envelope machinery: this is the reference the
approximate energies and their variational tags are tested against.
The scheme is deliberately the simplest one with a controllable error:
global accuracy is O(h^4) in the mesh step, and the box is grown until
the classical turning point sits below 60% of it and the WKB tail
suppression is strong enough not to bias the eigenvalue.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError, DomainError, NoBoundState
from .model import InteractionTriple

__all__ = ["radial_eigenvalue"]

# turning point must stay below this fraction of the box
_TURNING_FRACTION = 0.6
# required WKB action integral over the forbidden region; e^(-2*15) ~ 1e-13
_MIN_TAIL_ACTION = 15.0
_MAX_BOX_GROWTHS = 14
_MAX_UNBOUND_ROUNDS = 5


def _asymptote(potential: InteractionTriple) -> float:
    """Potential value at the largest probe radius that evaluates finitely.

    Confining potentials report a huge (or infinite) value, so the
    bound-state check against this limit never fires for them.
    """
    limit = math.inf
    for radius in (1e5, 1e6, 1e7):
        try:
            value = potential.value(radius)
        except (OverflowError, ValueError):
            break
        if not math.isfinite(value):
            break
        limit = value
    return limit


def _laurent_coeffs(potential: InteractionTriple, eta: float = 1e-8) -> tuple[float, float]:
    """Estimate A and B in V(r) ~ A/r + B near the origin.

    Richardson extrapolation of r*V(r) and V(r) - A/r at two small
    radii; exact for potentials that actually have this form, and a
    harmless ~0 for regular ones.
    """
    t1 = eta * potential.value(eta)
    t2 = (eta / 2.0) * potential.value(eta / 2.0)
    a = 2.0 * t2 - t1
    if abs(a) < 1e-10 * max(1.0, abs(t1)):
        a = 0.0
    s1 = potential.value(eta) - (a / eta if a else 0.0)
    s2 = potential.value(eta / 2.0) - (a / (eta / 2.0) if a else 0.0)
    b = 2.0 * s2 - s1
    if not math.isfinite(b):
        b = 0.0
    return a, b


def _sweep(f: np.ndarray, u1: float, first_term: float = 0.0) -> tuple[int, float]:
    """One Numerov pass; returns (interior node count, u at the box edge).

    f holds the Numerov factors 1 + h^2 k^2 / 12.  first_term stands in
    for f_0 u_0 in the first three-point relation: u(0) = 0, but the
    product (V u)(r) can have a finite limit at the origin that the
    grid cannot represent.  The recurrence is sequential, so this runs
    as a plain Python loop over lists.
    """
    fl = f.tolist()
    u_prev = 0.0
    u_cur = u1
    nodes = 0
    f_cur = fl[1]
    carry = first_term
    for i in range(2, len(fl)):
        f_next = fl[i]
        u_next = ((12.0 - 10.0 * f_cur) * u_cur - carry) / f_next
        if u_next * u_cur < 0.0:
            nodes += 1
        u_prev, u_cur = u_cur, u_next
        carry = f_cur * u_prev
        f_cur = f_next
        if abs(u_cur) > 1e250:
            # rescale; the eigenvalue condition only uses signs and zeros
            u_prev *= 1e-250
            u_cur *= 1e-250
            carry *= 1e-250
    return nodes, u_cur


class _Shooter:
    """Shooting machinery on a fixed box [0, rmax] with npoints steps."""

    def __init__(
        self,
        mu: float,
        potential: InteractionTriple,
        l: int,
        rmax: float,
        npoints: int,
        laurent: tuple[float, float],
    ):
        self.mu = mu
        self.l = l
        self.rmax = rmax
        self.h = rmax / npoints
        self.r = np.linspace(0.0, rmax, npoints + 1)
        v = np.empty_like(self.r)
        v[0] = 0.0  # never used: u(0) = 0 kills the first Numerov term
        v[1:] = [potential.value(float(r)) for r in self.r[1:]]
        cent = np.zeros_like(self.r)
        if l > 0:
            cent[1:] = l * (l + 1) / (2.0 * mu * self.r[1:] ** 2)
        self.veff = v + cent
        self.veff[0] = 0.0
        self.lau_a, self.lau_b = laurent
        # limit of 2 mu (V_eff - E) u at r = 0 for u ~ r^(l+1): the 1/r
        # part of V survives at l = 0, the centrifugal term at l = 1
        if l == 0:
            self.g0 = 2.0 * mu * self.lau_a
        elif l == 1:
            self.g0 = 2.0
        else:
            self.g0 = 0.0

    def _u1(self, e: float) -> float:
        # series start u ~ r^(l+1) (1 + c1 r + c2 r^2) restores O(h^4)
        # for Coulomb-like potentials
        h, l = self.h, self.l
        c1 = self.mu * self.lau_a / (l + 1.0)
        c2 = (
            self.mu * (self.lau_a * c1 + self.lau_b - e) / (2.0 * l + 3.0)
        )
        return h ** (l + 1) * (1.0 + h * (c1 + h * c2))

    def shoot(self, e: float) -> tuple[int, float]:
        f = 1.0 + (self.h * self.h * self.mu / 6.0) * (e - self.veff)
        f[0] = 1.0
        first = -(self.h * self.h / 12.0) * self.g0
        return _sweep(f, self._u1(e), first)

    def nodes(self, e: float) -> int:
        return self.shoot(e)[0]

    def solve(self, n_r: int, etol: float) -> float:
        """Bisection on the node count boundary between n_r and n_r + 1."""
        vmin = float(np.min(self.veff[1:]))
        vedge = float(self.veff[-1])
        lo = vmin if math.isfinite(vmin) else -1.0
        hi = max(vedge, vmin + 1.0)
        span = max(abs(hi - lo), 1.0)
        for _ in range(80):
            if self.nodes(lo) <= n_r:
                break
            lo -= span
            span *= 2.0
        else:
            raise ConvergenceError("could not bracket the level from below")
        span = max(abs(hi - lo), 1.0)
        for _ in range(80):
            if self.nodes(hi) >= n_r + 1:
                break
            hi += span
            span *= 2.0
        else:
            raise ConvergenceError("could not bracket the level from above")
        while hi - lo > etol * max(1.0, abs(lo), abs(hi)):
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if self.nodes(mid) <= n_r:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    def turning_point(self, e: float) -> float:
        above = self.r[1:][self.veff[1:] <= e]
        return float(above[-1]) if len(above) else 0.0

    def tail_action(self, e: float) -> float:
        ksq = 2.0 * self.mu * (self.veff[1:] - e)
        kappa = np.sqrt(np.clip(ksq, 0.0, None))
        return float(np.trapezoid(kappa, self.r[1:]))


def radial_eigenvalue(
    mu: float,
    potential: InteractionTriple,
    l: int,
    n_r: int,
    rmax: float | None = None,
    npoints: int | None = None,
    etol: float = 1e-13,
) -> float:
    """Eigenvalue with n_r radial nodes and orbital momentum l.

    mu is the reduced mass; the potential must support the requested
    bound state (NoBoundState otherwise).  rmax/npoints override the
    adaptive box and mesh, which the convergence tests use to measure
    the O(h^4) error scaling directly.
    """
    if mu <= 0.0 or not math.isfinite(mu):
        raise DomainError(f"reduced mass must be positive, got {mu!r}")
    if l < 0 or n_r < 0:
        raise DomainError(f"quantum numbers must be >= 0, got l={l!r}, n_r={n_r!r}")

    laurent = _laurent_coeffs(potential)
    asym = _asymptote(potential)
    fixed_box = rmax is not None
    box = rmax if fixed_box else 10.0 / math.sqrt(mu)
    unbound_rounds = 0

    for _ in range(_MAX_BOX_GROWTHS):
        n = npoints if npoints is not None else int(min(25000.0, max(4000.0, 160.0 * box)))
        shooter = _Shooter(mu, potential, l, box, n, laurent)
        e = shooter.solve(n_r, etol)
        # a level at or above the potential's large-distance limit is a
        # box artefact; it sinks below on growth only if a real state
        # was being squeezed
        if e >= asym - 1e-12 * max(1.0, abs(asym)):
            unbound_rounds += 1
            if fixed_box or unbound_rounds >= _MAX_UNBOUND_ROUNDS:
                raise NoBoundState(
                    f"no level with n_r={n_r}, l={l} below the asymptotic "
                    f"potential ({e:.6g} >= {asym:.6g})"
                )
            box *= 1.8
            continue
        if fixed_box:
            break
        rt = shooter.turning_point(e)
        if rt <= _TURNING_FRACTION * box and shooter.tail_action(e) >= _MIN_TAIL_ACTION:
            break
        box *= 1.8
    else:
        raise ConvergenceError(
            f"box did not stabilise below rmax={box:.6g}; is the state bound?"
        )

    nodes_below = shooter.nodes(e - 10.0 * etol * max(1.0, abs(e)))
    if nodes_below != n_r:
        raise ConvergenceError(
            f"converged level has {nodes_below} nodes, expected {n_r}"
        )
    return e
