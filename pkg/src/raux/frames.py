"""Saddle-frame geometry for the two asymptotic expansions.

Right-plane frame (expansion of R(s) itself):

    xi  = sqrt(s / 2 pi i),  branch with -3pi/4 < arg xi < pi/4
    ell = floor(xi_1 - xi_2)           (>= 0 on the allowed sector)
    q   = -2 (ell + 1/2 - xi)          (lands in the strip -1 <= q1-q2 < 1)
    tau = -1 / (4 sqrt(pi) xi)

Left-plane frame (expansion of conj-R(1-s)):

    eta = sqrt((s-1) / 2 pi i),  branch with -pi/4 < arg eta < 3pi/4
    m   = floor(eta_1 + eta_2)
    p   = -2 (m + 1/2 - eta)           (conj(p) lands in the same strip)

Whenever both exist, eta(s) = conj(xi(1 - conj s)) and p = conj(q(1 - conj s)).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import BranchCutError
from .gfunc import StripPoint, strip_coords

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SaddleFrame:
    s: complex
    xi: complex
    ell: int
    q: complex
    tau: complex
    strip: StripPoint


@dataclass(frozen=True)
class LeftFrame:
    s: complex
    eta: complex
    m: int
    p: complex


def _sector_sqrt(w: complex, lo: float, hi: float) -> complex:
    """The square root of w whose argument lies in (lo, hi], hi - lo = pi."""
    r = cmath.sqrt(w)
    a = cmath.phase(r)
    if lo < a <= hi:
        return r
    return -r


def saddle_frame(s: complex) -> SaddleFrame:
    """Derived quantities for the right-plane expansion of R(s)."""
    s = complex(s)
    if s.imag == 0.0 and s.real <= 0.0:
        raise BranchCutError("saddle frame undefined on the ray s <= 0")
    xi = _sector_sqrt(s / (TWO_PI * 1j), -0.75 * math.pi, 0.25 * math.pi)
    ell = math.floor(xi.real - xi.imag)
    q = -2.0 * (ell + 0.5 - xi)
    tau = -1.0 / (4.0 * math.sqrt(math.pi) * xi)
    return SaddleFrame(s=s, xi=xi, ell=ell, q=q, tau=tau, strip=strip_coords(q))


def left_frame(s: complex) -> LeftFrame:
    """Derived quantities for the left-plane expansion through 1 - s."""
    s = complex(s)
    w = s - 1.0
    if w.imag == 0.0 and w.real >= 0.0:
        raise BranchCutError("left frame undefined for s - 1 on the ray >= 0")
    eta = _sector_sqrt(w / (TWO_PI * 1j), -0.25 * math.pi, 0.75 * math.pi)
    m = math.floor(eta.real + eta.imag)
    p = -2.0 * (m + 0.5 - eta)
    return LeftFrame(s=s, eta=eta, m=m, p=p)
