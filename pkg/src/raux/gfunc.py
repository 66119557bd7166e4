"""The first-term function G(q), its derivatives, and the strip geometry.

    G(q) = ( e^{i pi q^2 / 2} - sqrt(2) e^{i pi/8} cos(pi q / 2) ) / cos(pi q)

G is entire: at every half-odd integer both numerator and denominator have
a simple zero, so the quotient is computed there by a recentered jet
division with a degree shift.  The strip coordinates

    mu = (Re q + Im q)/sqrt(2),   nu = (Im q - Re q)/sqrt(2)

(so q = (mu + i nu) e^{i pi/4}) control everything: |G| decays like
exp(-pi |mu| / (2 sqrt 2)) on the strips |nu| <= a/sqrt(2), and G has no
zeros at all on the a = 1 strip, which the winding certificate verifies.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import RauxError
from .jets import Jet, jet_div
from .scaled import wrap_phase

SQRT2 = math.sqrt(2.0)
_PREF = SQRT2 * cmath.exp(1j * math.pi / 8.0)
# Switch to the recentered series inside this distance of a half-odd
# integer.  Direct jet division amplifies noise like dist^(-order) (the
# reciprocal-cosine series only converges to the nearest zero), so the
# recentered route -- whose shifted denominator has radius 1 and leading
# coefficient -pi -- is the rule for jets, not the exception; beyond 0.6
# the direct quotient is comfortably conditioned for the orders used here.
# Plain evaluation only suffers the epsilon/dist cancellation of the
# numerator, so its switch radius can stay small.
_REMOVABLE_RADIUS = 0.6
_REMOVABLE_RADIUS_EVAL = 0.01


def _series_order(c: float, dist: float, base: int) -> int:
    # translation/evaluation tail ~ (pi(|c|+1) e dist / m)^m
    return base + int(2.72 * math.pi * (abs(c) + 1.0) * min(dist, _REMOVABLE_RADIUS))


@dataclass(frozen=True)
class StripPoint:
    q: complex
    mu: float
    nu: float


def strip_coords(q: complex) -> StripPoint:
    """Rotated strip coordinates with q = (mu + i nu) e^{i pi/4}."""
    q = complex(q)
    return StripPoint(
        q=q,
        mu=(q.real + q.imag) / SQRT2,
        nu=(q.imag - q.real) / SQRT2,
    )


def from_strip(mu: float, nu: float) -> complex:
    return complex(mu, nu) * cmath.exp(0.25j * math.pi)


def _numerator(q: complex) -> complex:
    return cmath.exp(0.5j * math.pi * q * q) - _PREF * cmath.cos(0.5 * math.pi * q)


def _nearest_half_odd(q: complex) -> float:
    return math.floor(q.real) + 0.5


def _cos_jet(a: complex, b: complex, order: int) -> Jet:
    """Jet of x -> cos(a + b x): derivatives cycle through +-cos/sin."""
    ca, sa = cmath.cos(a), cmath.sin(a)
    cycle = (ca, -sa, -ca, sa)
    coeffs = [
        cycle[m % 4] * b ** m / math.factorial(m) for m in range(order + 1)
    ]
    return Jet(coeffs)


def _num_jet(q: complex, order: int) -> Jet:
    """Jet of the numerator of G at q."""
    quad = Jet.constant(0.5j * math.pi * q * q, order)
    if order >= 1:
        quad.coeffs[1] = 1j * math.pi * q
    if order >= 2:
        quad.coeffs[2] = 0.5j * math.pi
    return quad.exp() - _PREF * _cos_jet(0.5 * math.pi * q, 0.5 * math.pi, order)


def _den_jet(q: complex, order: int) -> Jet:
    return _cos_jet(math.pi * q, math.pi, order)


def g_jet(q: complex, n: int) -> Jet:
    """Jet of G at q of order n.

    Near a half-odd integer c the quotient is 0/0: both jets are rebuilt at
    c with padding, their (analytically zero) constant terms dropped by the
    shift division, and the result translated back to q.  The padding keeps
    the translation truncation below ~|q-c|^8.
    """
    if n < 0:
        raise ValueError("jet order must be >= 0")
    q = complex(q)
    c = _nearest_half_odd(q)
    delta = q - c
    if abs(delta) >= _REMOVABLE_RADIUS:
        return jet_div(_num_jet(q, n), _den_jet(q, n))
    order = _series_order(c, abs(delta), n + 14)
    num = _num_jet(c, order + 1)
    den = _den_jet(c, order + 1)
    if max(abs(num.coeffs[0]), abs(den.coeffs[0])) > 1e-9:
        raise RauxError("expected common zero at half-odd integer")
    num.coeffs[0] = 0.0
    den.coeffs[0] = 0.0
    series = jet_div(num, den)  # removable shift, order drops by 1
    return series.translate(delta).truncate(n)


def g_eval(q: complex) -> complex:
    """G(q); entire, removable singularities handled by local series."""
    q = complex(q)
    c = _nearest_half_odd(q)
    d = abs(q - c)
    if d < _REMOVABLE_RADIUS_EVAL:
        order = _series_order(c, d, 22)
        num = _num_jet(c, order)
        den = _den_jet(c, order)
        num.coeffs[0] = 0.0
        den.coeffs[0] = 0.0
        return jet_div(num, den).eval(q - c)
    return _numerator(q) / cmath.cos(math.pi * q)


def g_eval_grid(qs: np.ndarray) -> np.ndarray:
    """Vectorized G over an array of points (same removable handling)."""
    qs = np.asarray(qs, dtype=complex)
    flat = qs.ravel()
    cs = np.floor(flat.real) + 0.5
    near = np.abs(flat - cs) < _REMOVABLE_RADIUS_EVAL
    out = np.empty_like(flat)
    safe = ~near
    z = flat[safe]
    out[safe] = (
        np.exp(0.5j * np.pi * z * z) - _PREF * np.cos(0.5 * np.pi * z)
    ) / np.cos(np.pi * z)
    for idx in np.nonzero(near)[0]:
        out[idx] = g_eval(complex(flat[idx]))
    return out.reshape(qs.shape)


def g_asymptotic(q: complex) -> complex:
    """Leading behaviour -sqrt(2) e^{i pi/8} exp(-pi/(2 sqrt 2) (mu+nu-i(mu-nu))).

    Valid on the right half-strip (mu > 0); relative error is
    O(exp(-pi mu / sqrt 2)).
    """
    sp = strip_coords(q)
    if sp.mu <= 0:
        raise RauxError("asymptotic form needs mu > 0; use evenness first")
    w = -math.pi / (2.0 * SQRT2) * complex(sp.mu + sp.nu, -(sp.mu - sp.nu))
    return -_PREF * cmath.exp(w)


# ----------------------------------------------------------------------
# non-vanishing certificate on the unit strip
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    winding: int
    min_abs: float
    tail_margin: float


def _phase_winding(path_fn, t0: float, t1: float, eval_fn, max_step: float = math.pi / 2):
    """Total continuous phase change of eval_fn(path_fn(t)), t0 -> t1.

    Adaptive bisection keeps each increment under max_step; raises if an
    interval collapses without the increment shrinking (zero on the path).
    """
    from .errors import EdgeZeroError

    def phase(t):
        w = eval_fn(path_fn(t))
        if w == 0:
            raise EdgeZeroError("path passes exactly through a zero")
        return cmath.phase(w)

    total = 0.0
    stack = [(t0, phase(t0), t1, phase(t1))]
    while stack:
        a, pa, b, pb = stack.pop()
        d = wrap_phase(pb - pa)
        if abs(d) < max_step:
            total += d
            continue
        if abs(b - a) < 1e-12 * max(1.0, abs(t1 - t0)):
            raise EdgeZeroError("phase step does not shrink; zero on the path")
        m = 0.5 * (a + b)
        pm = phase(m)
        stack.append((a, pa, m, pm))
        stack.append((m, pm, b, pb))
    return total


def nonvanishing_certificate(grid_step: float = 0.01) -> Certificate:
    """Winding + minimum-modulus certificate on the parallelogram |mu|<=2.

    The boundary image of G must not enclose 0 (winding 0) and |G| must be
    bounded away from 0 on the grid; beyond mu = 2 the analytic bound
    sinh(pi mu/(2 sqrt 2) - pi/4)/sqrt(2) - e^{pi/4} e^{-pi mu^2/2} > 0
    takes over (sampled on mu in [2, 10]).
    """
    if grid_step > 0.01:
        raise ValueError("certificate requires grid_step <= 0.01")
    nu_max = 1.0 / SQRT2

    corners = [
        (-2.0, -nu_max), (2.0, -nu_max), (2.0, nu_max), (-2.0, nu_max),
        (-2.0, -nu_max),
    ]
    total = 0.0
    for (m0, n0), (m1, n1) in zip(corners, corners[1:]):
        def path(t, m0=m0, n0=n0, m1=m1, n1=n1):
            return from_strip(m0 + t * (m1 - m0), n0 + t * (n1 - n0))

        total += _phase_winding(path, 0.0, 1.0, g_eval)
    winding = round(total / (2.0 * math.pi))
    if abs(total / (2.0 * math.pi) - winding) > 0.05:
        raise RauxError(f"winding did not close up: {total / (2 * math.pi):.6f}")

    mus = np.arange(-2.0, 2.0 + grid_step / 2, grid_step)
    nus = np.arange(-nu_max, nu_max + grid_step / 2, grid_step)
    mm, nn = np.meshgrid(mus, nus)
    qs = (mm + 1j * nn) * cmath.exp(0.25j * math.pi)
    min_abs = float(np.min(np.abs(g_eval_grid(qs))))

    tail_mu = np.arange(2.0, 10.0 + 1e-9, 0.01)
    tail = (
        np.sinh(math.pi * tail_mu / (2 * SQRT2) - math.pi / 4.0) / SQRT2
        - math.exp(math.pi / 4.0) * np.exp(-math.pi * tail_mu ** 2 / 2.0)
    )
    return Certificate(
        winding=int(winding), min_abs=min_abs, tail_margin=float(np.min(tail))
    )
