"""Panel quadrature for contour integrals with endpoint power singularities.

The integrands handled here behave like (z - s)^(-mu) with 0 < mu < 1 at a
panel endpoint s.  Panels adjacent to such an endpoint use Gauss-Jacobi
nodes whose weight absorbs the exact exponent; interior panels fall back to
Gauss-Legendre.  Error estimates come from comparing two node counts, with
bisection when the target is missed.  A tanh-sinh rule is available as a
fallback kind; it handles endpoint singularities without knowing mu.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi


@dataclass(frozen=True)
class QuadratureRule:
    kind: str = "gauss-jacobi-split"  # or "tanh-sinh"
    nodes_per_panel: int = 48
    target_abs_err: float = 1e-12

    def __post_init__(self):
        if self.target_abs_err <= 0:
            raise ValueError("target_abs_err must be positive")
        if self.nodes_per_panel < 4:
            raise ValueError("nodes_per_panel must be at least 4")
        if self.kind not in ("gauss-jacobi-split", "tanh-sinh"):
            raise ValueError(f"unknown quadrature kind {self.kind!r}")


DEFAULT_RULE = QuadratureRule()


class QuadratureFailure(RuntimeError):
    """Estimated quadrature error exceeded the rule's target."""


def clog(z: complex) -> complex:
    """Principal log with the real axis approached from above.

    Negative reals with a -0.0 imaginary part would otherwise pick up
    argument -pi; boundary values must see the upper side.
    """
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)  # normalize -0.0 to +0.0
    return cmath.log(z)


@lru_cache(maxsize=64)
def _jacobi_nodes(n: int, alpha: float, beta: float):
    x, w = roots_jacobi(n, alpha, beta)
    return x, w


def _panel_gj(f, s0: complex, s1: complex, mu0: float, mu1: float, n: int) -> complex:
    """One Gauss-Jacobi panel of int f dz over [s0, s1].

    f must behave like (z-s0)^(-mu0) at s0 and (z-s1)^(-mu1) at s1; the
    singular factors are divided out against the Jacobi weight on the same
    principal branch, so the scheme is exact for any segment orientation.
    """
    x, w = _jacobi_nodes(n, -mu1, -mu0)
    r = (s1 - s0) / 2.0
    z = s0 + r * (x + 1.0)
    vals = np.empty(len(z), dtype=complex)
    for i, zz in enumerate(z):
        h = f(zz)
        if mu0:
            h *= np.exp(mu0 * clog(zz - s0))
        if mu1:
            h *= np.exp(mu1 * clog(zz - s1))
        vals[i] = h
    pre = r
    if mu0:
        pre *= np.exp(-mu0 * clog(r))
    if mu1:
        pre *= np.exp(-mu1 * clog(-r))
    return pre * np.dot(w, vals)


def _panel_ts(f, s0: complex, s1: complex, n: int) -> complex:
    """Tanh-sinh panel; tolerates integrable endpoint singularities blindly."""
    h = 3.0 / n
    j = np.arange(-n, n + 1)
    t = j * h
    u = np.tanh(0.5 * math.pi * np.sinh(t))
    du = 0.5 * math.pi * np.cosh(t) / np.cosh(0.5 * math.pi * np.sinh(t)) ** 2
    r = (s1 - s0) / 2.0
    mid = (s0 + s1) / 2.0
    total = 0.0 + 0.0j
    for uu, dd in zip(u, du):
        if abs(uu) >= 1.0:
            continue
        total += f(mid + r * uu) * dd
    return total * h * r


def panel(f, s0, s1, mu0=0.0, mu1=0.0, rule: QuadratureRule = DEFAULT_RULE,
          _depth: int = 0) -> complex:
    """Adaptive panel with an a-posteriori two-resolution error estimate."""
    n = rule.nodes_per_panel
    if rule.kind == "tanh-sinh":
        coarse = _panel_ts(f, s0, s1, 2 * n)
        fine = _panel_ts(f, s0, s1, 4 * n)
    else:
        coarse = _panel_gj(f, s0, s1, mu0, mu1, n)
        fine = _panel_gj(f, s0, s1, mu0, mu1, n + n // 2 + 8)
    err = abs(fine - coarse)
    if err <= rule.target_abs_err or abs(s1 - s0) < 1e-13:
        return fine
    if _depth >= 24:
        raise QuadratureFailure(
            f"panel [{s0}, {s1}] error estimate {err:.3e} exceeds "
            f"target {rule.target_abs_err:.3e}")
    mid = (s0 + s1) / 2.0
    return (panel(f, s0, mid, mu0, 0.0, rule, _depth + 1)
            + panel(f, mid, s1, 0.0, mu1, rule, _depth + 1))


def contour(f, waypoints, mu_start=0.0, mu_end=0.0,
            rule: QuadratureRule = DEFAULT_RULE) -> complex:
    """Integrate f along a polyline; exponents apply at the two ends only."""
    pts = list(waypoints)
    total = 0.0 + 0.0j
    for i in range(len(pts) - 1):
        m0 = mu_start if i == 0 else 0.0
        m1 = mu_end if i == len(pts) - 2 else 0.0
        if pts[i] == pts[i + 1]:
            continue
        total += panel(f, pts[i], pts[i + 1], m0, m1, rule)
    return total


def segment_point_distance(p: complex, q: complex, z: complex) -> float:
    """Distance from z to the closed segment [p, q]."""
    u = q - p
    if u == 0:
        return abs(z - p)
    t = ((z - p) / u).real
    t = min(max(t, 0.0), 1.0)
    return abs(z - (p + t * u))
