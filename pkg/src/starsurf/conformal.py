"""The Schwarz-Christoffel map onto the (1,2,7) triangle and its ten-th root.

The defining polynomial is f(xi) = xi^8 (xi-a)^3 (xi-b)^9 and the map is

    F_T(xi) = k * integral_0^xi d zeta / eta(zeta),      eta^10 = f,

with prevertices 0, a, b on the real axis going to the corners O, A, B with
interior angles 2pi/10, 7pi/10, pi/10.  The normalization k is fixed by
F_T(a) = a.

Branch convention.  Sheet 0 is

    eta_0(xi) = e^{4 pi i/5} * exp( (4/5) Log xi + (3/10) Log(xi-a)
                                    + (9/10) Log(xi-b) )

with principal logs taken from the upper side of the real axis.  The
constant phase makes eta_0 real and positive on (0, a), hence k real and
positive; sheet k is eta_k = e^{i pi k/5} * eta_0, k = 0..9.  Sheet 0 is
continuous on the open upper half-plane; the jump set of the family is the
segment [0, b] of the real axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .geometry import INNER_RADIUS, OUTER_RADIUS
from .quadrature import (DEFAULT_RULE, QuadratureFailure, QuadratureRule,
                         clog, contour, panel, segment_point_distance)

A = INNER_RADIUS
B = OUTER_RADIUS

PREVERTICES = (0.0, A, B)
#: integrand 1/eta endpoint exponents at the prevertices: all in (0, 1)
MU = {0.0: 0.8, A: 0.3, B: 0.9}

SHEET_COUNT = 10
BRANCH_PHASE = cmath.exp(4j * math.pi / 5)

#: clearance below which the integration path detours around a or b
PATH_CLEARANCE = 0.05

#: default tolerance for map-image assertions
TOL_MAP = 1e-8


class SingularFiber(ValueError):
    """Evaluation at one of the deleted fibers xi in {0, a, b}."""


def f(xi: complex) -> complex:
    """The curve polynomial xi^8 (xi-a)^3 (xi-b)^9."""
    return xi ** 8 * (xi - A) ** 3 * (xi - B) ** 9


def f_prime(xi: complex) -> complex:
    """Derivative of f, in product form to avoid cancellation."""
    return (xi ** 7 * (xi - A) ** 2 * (xi - B) ** 8
            * (8 * (xi - A) * (xi - B) + 3 * xi * (xi - B) + 9 * xi * (xi - A)))


def _check_regular(xi: complex, tol: float = 1e-13) -> complex:
    xi = complex(xi)
    for s in PREVERTICES:
        if abs(xi - s) <= tol:
            raise SingularFiber(f"xi = {xi} is within {tol} of the fiber over {s}")
    return xi


def eta_ref(xi: complex) -> complex:
    """Sheet-0 branch of the 10th root of f (positive on (0, a))."""
    return BRANCH_PHASE * cmath.exp(
        0.8 * clog(xi) + 0.3 * clog(xi - A) + 0.9 * clog(xi - B))


def eta(xi: complex, sheet: int) -> complex:
    """The sheet-th branch: e^{i pi sheet/5} * eta_0(xi)."""
    xi = _check_regular(xi)
    return cmath.exp(1j * math.pi * (sheet % SHEET_COUNT) / 5) * eta_ref(xi)


def sheet_values(xi: complex) -> list[complex]:
    """All ten branch values at xi, indexed by sheet."""
    e0 = eta_ref(xi)
    return [cmath.exp(1j * math.pi * k / 5) * e0 for k in range(SHEET_COUNT)]


@dataclass(frozen=True)
class SheetedPoint:
    """A regular point (xi, eta_sheet(xi)) of the ten-sheeted curve."""

    xi: complex
    sheet: int

    def __post_init__(self):
        _check_regular(self.xi)
        if not 0 <= self.sheet < SHEET_COUNT:
            raise ValueError(f"sheet must be in 0..9, got {self.sheet}")

    @property
    def eta(self) -> complex:
        return eta(self.xi, self.sheet)


def _inv_eta(z: complex) -> complex:
    return 1.0 / eta_ref(z)


@lru_cache(maxsize=8)
def compute_k(rule: QuadratureRule = DEFAULT_RULE) -> float:
    """Normalization k = a / integral_0^a d xi/eta, real and positive.

    Cached for the process lifetime; the cache key is the (frozen) rule.
    """
    half = A / 2.0
    val = (panel(_inv_eta, 0.0, half, mu0=MU[0.0], rule=rule)
           + panel(_inv_eta, half, A, mu1=MU[A], rule=rule))
    if abs(val.imag) > 1e-9 * abs(val.real):
        raise QuadratureFailure(f"F(a) = {val} is not real; branch error")
    k = A / val.real
    if k <= 0:
        raise QuadratureFailure(f"computed k = {k} is not positive")
    return k


def _real_axis_chain(x: float) -> tuple[list, list]:
    """Panels [(s0, s1, mu0, mu1)] along the real axis from 0 to x >= 0."""
    stops = [s for s in (0.0, A, B) if s < x] + [x]
    panels = []
    for i in range(len(stops) - 1):
        s0, s1 = stops[i], stops[i + 1]
        mid = (s0 + s1) / 2.0
        mu0 = MU.get(s0, 0.0)
        mu1 = MU.get(s1, 0.0)
        if mu0 and mu1:
            panels.append((s0, mid, mu0, 0.0))
            panels.append((mid, s1, 0.0, mu1))
        else:
            panels.append((s0, s1, mu0, mu1))
    return stops, panels


def _path_to(xi: complex) -> list[complex]:
    """Waypoints 0 -> xi keeping PATH_CLEARANCE away from a and b en route."""
    if min(segment_point_distance(0.0, xi, A),
           segment_point_distance(0.0, xi, B)) > PATH_CLEARANCE or abs(xi) < A / 2:
        return [0.0, xi]
    lift = 1j * max(1.0, abs(xi))
    if min(segment_point_distance(lift, xi, A),
           segment_point_distance(lift, xi, B)) > PATH_CLEARANCE:
        return [0.0, lift, xi]
    # descend vertically onto targets close to the real axis near a or b
    drop = complex(xi.real, max(xi.imag, 0.35))
    return [0.0, lift, drop, xi]


def F_T(xi: complex, rule: QuadratureRule = DEFAULT_RULE) -> complex:
    """The normalized triangle map on the closed upper half-plane.

    Prevertices themselves are allowed (the integrand exponent there is
    > -1); other points of the deleted fiber neighborhood are fine too.
    The image lies in the closed triangle O, A, B.
    """
    xi = complex(xi)
    if xi.imag < -1e-12:
        raise ValueError("F_T is defined on the closed upper half-plane")
    k = compute_k(rule)
    if xi.imag <= 0.0 and xi.real >= 0.0:
        # boundary evaluation, exact endpoint exponents
        x = xi.real
        total = 0.0 + 0.0j
        for (s0, s1, mu0, mu1) in _real_axis_chain(x)[1]:
            total += panel(_inv_eta, s0, s1, mu0, mu1, rule)
        return k * total
    path = _path_to(xi)
    return k * contour(_inv_eta, path, mu_start=MU[0.0], rule=rule)


def F_Q(xi: complex, rule: QuadratureRule = DEFAULT_RULE) -> complex:
    """Schwarz reflection of F_T across (0, a): conj-symmetric on the plane.

    Upper half-plane -> T, lower half-plane -> conj(T); the union is the
    kite Q symmetric about the real axis.
    """
    xi = complex(xi)
    if xi.imag >= 0.0:
        return F_T(xi, rule)
    return F_T(xi.conjugate(), rule).conjugate()


def F_Kstar(xi: complex, nu: int, rule: QuadratureRule = DEFAULT_RULE) -> complex:
    """Sector map: eps^nu * F_Q, landing in the nu-th rotated kite of K."""
    if not 0 <= nu < 5:
        raise ValueError("nu must be in 0..4")
    return cmath.exp(2j * math.pi * nu / 5) * F_Q(xi, rule)


def corner_angle(prevertex: float, delta: float = 1e-4,
                 rule: QuadratureRule = DEFAULT_RULE) -> float:
    """Interior angle of the image corner at F_T(prevertex).

    Measured between the images of points delta before and after the
    prevertex on the real axis (with the left neighbor of 0 taken at -delta).
    """
    corner = F_T(prevertex, rule)
    before = F_T(prevertex - delta, rule)
    after = F_T(prevertex + delta, rule)
    v1 = before - corner
    v2 = after - corner
    ang = abs(cmath.phase(v2 / v1))
    return ang
