"""Zero localization and counting for R(s) by the argument principle.

R is entire, so the winding number of R along a rectangle boundary equals
the number of enclosed zeros.  The phase is accumulated by adaptive
bisection (each increment kept under pi/2), with the evaluator chosen per
boundary point by the region classifier -- no single method covers a
1000 x 1000 box whose values range over e^{+-1500}.  Refinement is Newton
with a centered-difference derivative, run in scaled arithmetic.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import CaptureError, ConvergenceError, EdgeZeroError
from .expansion import eval_auto
from .scaled import ScaledComplex, wrap_phase


@dataclass
class ZeroBox:
    x0: float
    x1: float
    y0: float
    y1: float
    count: int = -1
    zeros: list = field(default_factory=list)

    @property
    def corners(self):
        return (
            complex(self.x0, self.y0),
            complex(self.x1, self.y0),
            complex(self.x1, self.y1),
            complex(self.x0, self.y1),
        )


def _r_phase(s: complex, K: int = 4) -> float:
    value = eval_auto(s, K).value
    if value.is_zero:
        raise EdgeZeroError(f"exact zero on the boundary at {s}")
    return value.phase


def _edge_phase_change(a: complex, b: complex, K: int, max_step: float) -> float:
    """Continuous phase change of R along the segment a -> b.

    The initial sampling must already resolve the fastest possible phase
    rotation (|d arg R / ds| <~ |log xi| + pi per unit), otherwise a true
    jump of 2 pi - eps aliases to a small wrapped step and the adaptive
    bisection never fires.  Bisection then only polishes the safety margin.
    """
    smax = max(abs(a), abs(b))
    rate = 1.5 + math.pi + 0.5 * abs(math.log(max(smax, 7.0) / (2.0 * math.pi)))
    coarse = max(8, int(abs(b - a) * rate / (0.25 * math.pi)))
    params = [i / coarse for i in range(coarse + 1)]
    pts = [(t, _r_phase(a + t * (b - a), K)) for t in params]
    total = 0.0
    stack = list(zip(pts, pts[1:]))
    while stack:
        (ta, pa), (tb, pb) = stack.pop()
        d = wrap_phase(pb - pa)
        if abs(d) < max_step:
            total += d
            continue
        if tb - ta < 1e-10:
            raise EdgeZeroError("phase step will not shrink; zero hugs the edge")
        tm = 0.5 * (ta + tb)
        pm = _r_phase(a + tm * (b - a), K)
        stack.append(((ta, pa), (tm, pm)))
        stack.append(((tm, pm), (tb, pb)))
    return total


def count_zeros(box: ZeroBox, K: int = 4, max_attempts: int = 5) -> int:
    """Winding number of R around the box boundary (= zero count inside).

    Counterclockwise orientation; on detection of a zero pinned to an edge
    the box is inflated by up to 1e-3 and recounted.
    """
    grow = 0.0
    last_exc = None
    for _ in range(max_attempts):
        b = ZeroBox(box.x0 - grow, box.x1 + grow, box.y0 - grow, box.y1 + grow)
        try:
            total = 0.0
            cs = b.corners
            for p, q in zip(cs, cs[1:] + cs[:1]):
                total += _edge_phase_change(p, q, K, max_step=0.5 * math.pi)
            winding = total / (2.0 * math.pi)
            n = round(winding)
            if abs(winding - n) > 0.05:
                raise ConvergenceError(
                    f"winding did not close up: {winding:.4f}"
                )
            box.count = int(n)
            return box.count
        except EdgeZeroError as exc:
            last_exc = exc
            grow = 2.5e-4 if grow == 0.0 else min(2.0 * grow, 1e-3)
    raise EdgeZeroError(
        f"edge keeps passing through a zero after {max_attempts} perturbations"
    ) from last_exc


def _oracle_value(s: complex, K: int = 0) -> ScaledComplex:
    from .oracle import r_quad_origin_scaled, r_quad_saddle_scaled

    s = complex(s)
    if abs(s) <= 450.0 or (s.imag == 0.0 and s.real <= 0.0):
        return r_quad_origin_scaled(s)
    return r_quad_saddle_scaled(s)


def refine_zero(guess: complex, K: int = 6, capture: float | None = 0.5,
                max_iter: int = 50, method: str = "auto") -> complex:
    """Newton refinement of a zero of R near ``guess``.

    The derivative comes from a centered difference of the evaluator (a
    local order-2 jet); iteration stops at |step| < 1e-10.  ``method``
    picks the region-dispatched expansions ("auto", fast) or the contour
    oracle ("oracle", for small |s| where the expansions are coarse).
    Capture check (skipped when ``capture`` is None, e.g. inside a box
    whose winding already guarantees a zero): |R(guess)| must sit below
    ``capture`` times the value a zero-spacing away, and the iterate must
    stay near the guess -- both fail in zero-free territory.
    """
    evaluate = _oracle_value if method == "oracle" else (
        lambda s, K=K: eval_auto(s, K).value
    )
    z = complex(guess)
    scale = 1.0 + abs(z)
    first = evaluate(z, K)
    if first.is_zero:
        return z
    if capture is not None:
        probe = evaluate(z + 0.6, K)
        if not probe.is_zero and first.log_mod - probe.log_mod > math.log(capture):
            raise CaptureError(f"|R({z})| not small relative to the neighbourhood")
    h = 1e-4 * math.sqrt(scale)
    for _ in range(max_iter):
        value = evaluate(z, K)
        if value.is_zero:
            return z
        vp = evaluate(z + h, K)
        vm = evaluate(z - h, K)
        deriv = vp.sub(vm)
        if deriv.is_zero:
            raise ConvergenceError("flat derivative in Newton refinement")
        # step = R / R'  with R' ~ (vp - vm)/(2h)
        step = value.div(deriv).to_complex() * 2.0 * h
        z -= step
        if abs(z - guess) > 0.75 * scale ** 0.5:
            raise CaptureError(f"Newton wandered away from {guess}")
        if abs(step) < 1e-10 * scale:
            return z
        h = max(min(h, abs(step)), 1e-7 * math.sqrt(scale))
    raise ConvergenceError(f"Newton did not converge from {guess}")


def subdivide_count(box: ZeroBox, K: int = 4) -> list[int]:
    """Counts over the 2x2 quartering of the box (additivity check)."""
    xm = 0.5 * (box.x0 + box.x1)
    ym = 0.5 * (box.y0 + box.y1)
    quarters = [
        ZeroBox(box.x0, xm, box.y0, ym),
        ZeroBox(xm, box.x1, box.y0, ym),
        ZeroBox(box.x0, xm, ym, box.y1),
        ZeroBox(xm, box.x1, ym, box.y1),
    ]
    return [count_zeros(q, K) for q in quarters]


def _split_validated(b: ZeroBox, n: int, K: int):
    """Bisect so that the children's counts sum to the parent's.

    A zero sitting on a candidate cut would be claimed by both inflated
    halves (or neither), so cuts are retried at shifted fractions until
    the counts reconcile.
    """
    w, h = b.x1 - b.x0, b.y1 - b.y0
    vertical = w >= h
    for frac in (0.5, 0.5137, 0.4683, 0.5521, 0.4325, 0.583):
        if vertical:
            cut = b.x0 + frac * w
            b1 = ZeroBox(b.x0, cut, b.y0, b.y1)
            b2 = ZeroBox(cut, b.x1, b.y0, b.y1)
        else:
            cut = b.y0 + frac * h
            b1 = ZeroBox(b.x0, b.x1, b.y0, cut)
            b2 = ZeroBox(b.x0, b.x1, cut, b.y1)
        try:
            n1 = count_zeros(b1, K, max_attempts=1)
            n2 = count_zeros(b2, K, max_attempts=1)
        except (EdgeZeroError, ConvergenceError):
            continue
        if n1 + n2 == n:
            b1.count, b2.count = n1, n2
            return b1, b2
    raise EdgeZeroError(f"no clean cut found for box {b}")


def locate_zeros(box: ZeroBox, K: int = 4, min_size: float = 0.5,
                 method: str = "auto") -> list[complex]:
    """All zeros in the box, by recursive bisection down to isolation.

    Boxes with a single zero are handed to Newton starting at the centre.
    """
    found: list[complex] = []
    n0 = count_zeros(box, K)
    stack = [(box, n0)]
    while stack:
        b, n = stack.pop()
        if n == 0:
            continue
        w, h = b.x1 - b.x0, b.y1 - b.y0
        if n == 1 and max(w, h) <= min_size:
            centre = complex(0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1))
            found.append(
                refine_zero(centre, K=max(K, 6), capture=None, method=method)
            )
            continue
        b1, b2 = _split_validated(b, n, K)
        stack.append((b1, b1.count))
        stack.append((b2, b2.count))
    box.zeros = sorted(found, key=lambda z: (z.imag, z.real))
    return box.zeros
