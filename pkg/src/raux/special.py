"""Foundation special functions: log-Gamma, chi, Riemann-Siegel theta, zeta.

Everything here is oracle-grade plumbing for the expansion machinery:

* ``gamma_log`` -- principal branch of log Gamma via the Stirling series
  with argument-shift recursion, reflected across Re z = 1/2 with an
  unwound log-sin so the imaginary part never jumps by 2 pi.
* ``chi``      -- the functional-equation factor
  chi(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2), returned scaled since
  it reaches exp(+-thousands) in the left half-plane.
* ``theta_rs`` -- exact theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
* ``zeta_em``  -- zeta(s) by Euler-Maclaurin with adaptive cutoff, plus the
  cancellation-free tail variant ``zeta_minus_partial`` used by the
  left-plane expansion.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, PoleError
from .scaled import ScaledComplex

LOG_PI = math.log(math.pi)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_STIRLING_RADIUS = 16.0
_STIRLING_TERMS = 15


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    # sum_{j=0}^{n-1} C(n+1, j) B_j = 0
    acc = Fraction(0)
    for j in range(n):
        acc += math.comb(n + 1, j) * bernoulli(j)
    return -acc / (n + 1)


@lru_cache(maxsize=None)
def _stirling_coeffs() -> tuple:
    # B_{2r} / (2r (2r-1)), r = 1..R, in extended precision
    return tuple(
        np.longdouble(bernoulli(2 * r).numerator)
        / np.longdouble(bernoulli(2 * r).denominator)
        / np.longdouble(2 * r * (2 * r - 1))
        for r in range(1, _STIRLING_TERMS + 1)
    )


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


_LD_PI = np.longdouble("3.14159265358979323846264338327950288")
_LD_LOG_PI = np.log(_LD_PI)
_LD_LOG_2 = np.log(np.longdouble(2))
_LD_LOG_SQRT_2PI = 0.5 * np.log(2 * _LD_PI)


def _log_sin_pi_ld(z):
    """log sin(pi z) in clongdouble, unwound for principal-branch reflection.

    For Im z >= 0 uses sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}) with
    the first factor's log written out literally (no re-wrapping); the last
    factor stays inside the unit disc around 1 so its principal log is safe.
    Lower half-plane by Schwarz reflection.
    """
    if z.imag < 0.0:
        return np.conj(_log_sin_pi_ld(np.conj(z)))
    w = np.exp(2j * _LD_PI * z)
    return 1j * _LD_PI * (0.5 - z) - _LD_LOG_2 + np.log(1.0 - w)


def _gamma_log_ld(z):
    if z.real < 0.5:
        return _LD_LOG_PI - _log_sin_pi_ld(z) - _gamma_log_ld(1.0 - z)
    shift = np.clongdouble(0)
    while abs(z) < _STIRLING_RADIUS:
        shift -= np.log(z)
        z = z + 1.0
    w = 1.0 / z
    w2 = w * w
    series = np.clongdouble(0)
    for c in reversed(_stirling_coeffs()):
        series = (series + c) * w2
    series /= w  # sum c_r z^{-(2r-1)}
    return (z - 0.5) * np.log(z) - z + _LD_LOG_SQRT_2PI + series + shift


def gamma_log(z: complex) -> complex:
    """Principal branch of log Gamma(z).

    Argument-shift recursion moves Re z >= 1/2 points out to |z| >= 16 where
    the Stirling series with B_2..B_30 converges to spare digits; Re z < 1/2
    goes through the reflection formula with an unwound log-sin.  Internals
    run in 80-bit precision so the huge imaginary part (~ t log t) keeps
    absolute accuracy; one rounding on return.  Raises PoleError at
    z = 0, -1, -2, ...
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"log Gamma pole at z = {z.real:g}")
    return complex(_gamma_log_ld(np.clongdouble(z)))


def chi(s: complex) -> ScaledComplex:
    """Functional-equation factor chi(s) = pi^(s-1/2) Gamma((1-s)/2)/Gamma(s/2).

    Exactly zero at s = 0, -2, -4, ... (Gamma(s/2) poles); raises PoleError
    at s = 1, 3, 5, ... where Gamma((1-s)/2) has poles.
    """
    s = complex(s)
    if s.imag == 0.0 and s.real == math.floor(s.real):
        n = int(s.real)
        if n >= 1 and n % 2 == 1:
            raise PoleError(f"chi pole at s = {n}")
        if n <= 0 and n % 2 == 0:
            return ScaledComplex.zero()
    z = np.clongdouble(s)
    w = (z - 0.5) * _LD_LOG_PI + _gamma_log_ld((1.0 - z) / 2.0) - _gamma_log_ld(z / 2.0)
    # wrap the (huge) phase before rounding to binary64
    phase = float(np.mod(np.longdouble(w.imag) + _LD_PI, 2 * _LD_PI) - _LD_PI)
    return ScaledComplex.from_polar(float(w.real), phase)


def theta_rs(t: float) -> float:
    """Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi."""
    t = float(t)
    return gamma_log(complex(0.25, 0.5 * t)).imag - 0.5 * t * LOG_PI


def _csum(terms) -> complex:
    """Compensated complex summation (exact fsum on each component)."""
    terms = list(terms)
    return complex(
        math.fsum(w.real for w in terms), math.fsum(w.imag for w in terms)
    )


def _powers_minus_w(w: complex, lo: int, hi: int, ref: complex):
    """n^(-w) / exp(ref) for n = lo..hi-1, phases in extended precision.

    The oscillating part exp(-i t ln n) needs t*ln(n) mod 2pi to full double
    accuracy; at t ~ 1e4 a float64 product is already 1e-11 rad off, so the
    phase is reduced in 80-bit arithmetic before dropping to binary64.
    """
    n = np.arange(lo, hi, dtype=np.longdouble)
    ln = np.log(n)
    two_pi = 2.0 * np.pi
    phase = np.mod(-np.longdouble(w.imag) * ln - np.longdouble(ref.imag), two_pi)
    mag = np.exp((-np.longdouble(w.real)) * ln - np.longdouble(ref.real))
    out = mag.astype(np.float64) * np.exp(1j * phase.astype(np.float64))
    return out


def zeta_minus_partial(w: complex, m: int = 0) -> ScaledComplex:
    """zeta(w) - sum_{n<=m} n^(-w), cancellation-free, as a scaled value.

    Euler-Maclaurin from a cutoff N > m:

        sum_{n=m+1}^{N-1} n^(-w) + N^(1-w)/(w-1) + N^(-w)/2
        + sum_{r>=1} B_{2r}/(2r)! * w(w+1)...(w+2r-2) * N^(1-w-2r)

    All terms are computed relative to the largest endpoint power so the
    result stays meaningful even when every term underflows binary64 (deep
    left plane, where Re(w) is huge and the tail is ~ (m+1)^(-w)).  For
    Re(w) < 0 prefer the functional-equation route in ``zeta_em``: the
    direct formula cancels to depth N^|Re w|.
    """
    w = complex(w)
    if w == 1:
        raise PoleError("zeta pole at s = 1")
    nterms = 14
    N = max(m + 1, 20, int(0.9 * abs(w.imag)) + 16)
    for _ in range(8):
        # reference exponent: largest |n^-w| among the endpoints
        log_lo = -w * math.log(m + 1)
        log_hi = -w * math.log(N)
        ref = log_lo if log_lo.real >= log_hi.real else log_hi
        terms = list(_powers_minus_w(w, m + 1, N, ref))
        logN = math.log(N)
        endpoint = complex(_powers_minus_w(w, N, N + 1, ref)[0])  # N^-w / e^ref
        terms.append(endpoint * N / (w - 1.0))
        terms.append(0.5 * endpoint)
        poch = w  # w(w+1)...(w+2r-2)
        last = 0.0
        corrections = []
        for r in range(1, nterms + 1):
            coeff = float(bernoulli(2 * r)) / math.factorial(2 * r)
            term = coeff * poch * endpoint / (N ** (2 * r - 1))
            corrections.append(term)
            last = abs(term)
            poch *= (w + 2 * r - 1) * (w + 2 * r)
        total = _csum(terms + corrections)
        if total == 0:
            return ScaledComplex.zero()
        if last <= 1e-16 * abs(total):
            return ScaledComplex.from_log(ref).mul(
                ScaledComplex.from_complex(total)
            )
        N *= 2
    raise ConvergenceError(f"Euler-Maclaurin zeta did not converge at w={w}, N={N}")


def zeta_partial_sum(s: complex, ell: int) -> ScaledComplex:
    """sum_{n=1}^{ell} n^(-s), scaled (the terms reach n^|sigma| ~ e^4500).

    The largest term is factored out so only ratios <= 1 are summed; the
    compensated sum keeps the cancellation honest when the terms rotate.
    """
    s = complex(s)
    if ell <= 0:
        return ScaledComplex.zero()
    if ell == 1:
        return ScaledComplex.one()
    # largest |n^-s| at n = 1 (sigma >= 0) or n = ell (sigma < 0)
    nstar = 1 if s.real >= 0 else ell
    ref = -s * math.log(nstar)
    total = _csum(_powers_minus_w(s, 1, ell + 1, ref))
    if total == 0:
        return ScaledComplex.zero()
    return ScaledComplex.from_log(ref).mul(ScaledComplex.from_complex(total))


def zeta_em(s: complex) -> complex:
    """zeta(s) by Euler-Maclaurin; relative accuracy ~1e-12 for |Im s| <= 1e4.

    Direct Euler-Maclaurin loses one digit per unit of negative sigma (the
    partial sum cancels against the corrections to depth N^|sigma|), so the
    left half-plane routes through the functional equation
    zeta(s) = chi(s) zeta(1-s), whose right-hand side is evaluated directly.
    """
    return zeta_em_scaled(s).to_complex()


def zeta_em_scaled(s: complex) -> ScaledComplex:
    """Scaled variant of ``zeta_em`` (the reflected side reaches e^(+-10^4))."""
    s = complex(s)
    if s == 1:
        raise PoleError("zeta pole at s = 1")
    if s.real < 0.0:
        # chi(-2n) = 0 exactly, reproducing the trivial zeros
        return chi(s).mul(zeta_minus_partial(1.0 - s, 0))
    return zeta_minus_partial(s, 0)
