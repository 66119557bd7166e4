"""Validity regions of the asymptotic formulas, and the boundary angle phi(r).

Each evaluator below is backed by a theorem whose hypotheses carve out a
sector-like set; the classifier reports the most specific set containing a
point, with the fixed precedence

    L > M > N > Gset > P > DeltaOnly > Outside.

The lower boundary of L in the fourth quadrant is arg s = -pi/2 + 2 phi(r),
r = sqrt(|s|/2 pi), where phi(r) is the unique root in [0, pi/4] of

    u(r, phi) = (2 log r) sin 2phi - 2(pi/2 - phi) cos 2phi
                - sin 2phi - sin(phi)/r.

u is increasing in phi with u(r, 0) = -pi, so a safeguarded bisection/
Newton hybrid pins the root to ~1e-15; the four-term large-r series is
kept separately (it is asymptotic only, never used for classification).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import RauxError
from .oracle import du_dphi, u_region

TWO_PI = 2.0 * math.pi
_2PI_E = TWO_PI * math.e
_2PI_E2 = TWO_PI * math.e * math.e


def phi_of_r(r: float) -> float:
    """Unique root of u(r, .) in [0, pi/4]; requires r >= e."""
    if r < math.e:
        raise RauxError("phi(r) defined for r >= e")
    lo, hi = 0.0, 0.25 * math.pi
    phi = 0.25 * math.pi / max(math.log(r), 1.0)  # series-informed start
    phi = min(max(phi, lo), hi)
    for _ in range(100):
        val = u_region(r, phi)
        if abs(val) < 1e-14:
            return phi
        if val > 0:
            hi = phi
        else:
            lo = phi
        step = val / du_dphi(r, phi)
        cand = phi - step
        if not (lo < cand < hi):
            cand = 0.5 * (lo + hi)  # bisection safeguard
        if abs(cand - phi) < 1e-17:
            return cand
        phi = cand
    return phi


def phi_series(r: float) -> float:
    """Four-term large-r expansion of phi(r):
    pi/(4L) - pi^3/(48 L^3) + pi^3/(96 L^4) + pi^5/(320 L^5), L = log r."""
    if r <= 1.0:
        raise RauxError("phi series needs r > 1")
    L = math.log(r)
    return (
        math.pi / (4.0 * L)
        - math.pi ** 3 / (48.0 * L ** 3)
        + math.pi ** 3 / (96.0 * L ** 4)
        + math.pi ** 5 / (320.0 * L ** 5)
    )


@dataclass(frozen=True)
class RegionLabel:
    tag: str  # one of DeltaOnly, L, M, N, Gset, P, Outside
    theta: float


def in_delta(s: complex, theta: float) -> bool:
    if abs(s) < TWO_PI:
        return False
    if s.imag == 0.0 and s.real < 0.0:
        return False
    a = cmath.phase(s)
    return -math.pi + theta <= a <= math.pi - theta


def in_L(s: complex) -> bool:
    if abs(s) <= _2PI_E2:
        return False
    a = cmath.phase(s)
    if not (-0.5 * math.pi < a < 0.5 * math.pi):
        return False
    if a >= 0:
        return True
    r = math.sqrt(abs(s) / TWO_PI)
    return a > -0.5 * math.pi + 2.0 * phi_of_r(r)


def in_M(s: complex, theta: float) -> bool:
    if not (0.0 < theta < 0.5 * math.pi):
        return False
    if abs(s) <= _2PI_E2:
        return False
    a = cmath.phase(s)
    log_xi = 0.5 * math.log(abs(s) / TWO_PI)
    return -math.pi + theta < a < -0.5 * math.pi + math.atan(
        0.5 * math.pi / log_xi
    )


def in_N(s: complex) -> bool:
    if abs(s - 1.0) <= _2PI_E2 or s.real >= 1.0:
        return False
    t = s.imag
    if t <= _2PI_E:
        return True
    return s.real <= 1.0 - 8.0 * math.pi * math.sqrt(
        (t / TWO_PI) * math.log(t / TWO_PI)
    )


def in_Gset(s: complex) -> bool:
    w = s - 1.0
    if abs(w) <= _2PI_E:
        return False
    a = cmath.phase(w)
    top = 0.5 * math.pi + 2.0 * math.atan(math.sqrt(math.log(abs(w) / TWO_PI)))
    return 0.5 * math.pi <= a <= top


def in_P(s: complex) -> bool:
    """Fourth-quadrant control set in saddle coordinates:
    |xi| >= e, -pi/2 <= arg xi <= -pi/4 and |xi^(-2 pi i xi^2) e^(i pi xi^2 + pi xi)| <= 1."""
    if abs(s) < _2PI_E2:
        return False
    a = cmath.phase(s)
    if not (-0.5 * math.pi <= a <= 0.0):
        return False
    xi = cmath.sqrt(s / (TWO_PI * 1j))
    if cmath.phase(xi) > 0.25 * math.pi or cmath.phase(xi) <= -0.75 * math.pi:
        xi = -xi
    expo = -TWO_PI * 1j * xi * xi * cmath.log(xi) + 1j * math.pi * xi * xi + math.pi * xi
    return expo.real <= 0.0


def classify_region(s: complex, theta: float = 0.25 * math.pi) -> RegionLabel:
    """Most specific region containing s; ties break by fixed precedence.

    The theorems' strict inequalities stay strict, so boundary points fall
    through to the lower-precedence tag.
    """
    s = complex(s)
    if in_L(s):
        return RegionLabel("L", theta)
    if in_M(s, theta):
        return RegionLabel("M", theta)
    if in_N(s):
        return RegionLabel("N", theta)
    if in_Gset(s):
        return RegionLabel("Gset", theta)
    if in_P(s):
        return RegionLabel("P", theta)
    if in_delta(s, theta):
        return RegionLabel("DeltaOnly", theta)
    return RegionLabel("Outside", theta)
