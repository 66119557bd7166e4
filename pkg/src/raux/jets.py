"""Truncated power series (jets) and exact polynomial algebra.

Two representations, converted explicitly:

* ``GaussianRational`` / ``RationalPoly`` -- exact big-integer rationals of
  the form a/b + i c/d, used wherever coefficients must be generated
  exactly (the term-coefficient recurrences divide by integers, and any
  floating drift there would poison the high-order terms).
* ``Jet`` -- complex-float truncated Taylor series, used for evaluation
  (high-order derivatives of the first-term function, local series of the
  oscillatory quotients).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import JetOrderError, ParityError, RauxError


# ----------------------------------------------------------------------
# exact scalars
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianRational:
    """Exact complex rational re + i*im with Fraction components."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re=0, im=0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by Gaussian-rational zero")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return GaussianRational.of(1) / self ** (-n)
        out = GaussianRational.of(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


GR_ZERO = GaussianRational.of(0)
GR_ONE = GaussianRational.of(1)
GR_I = GaussianRational.of(0, 1)


def _try_coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x), Fraction(0))
    return None


def _coerce(x) -> GaussianRational:
    g = _try_coerce(x)
    if g is None:
        raise TypeError(f"cannot coerce {type(x)!r} to GaussianRational")
    return g


# ----------------------------------------------------------------------
# exact polynomials
# ----------------------------------------------------------------------

class RationalPoly:
    """Polynomial with GaussianRational coefficients (index k = x^k term).

    Immutable; trailing zeros are trimmed on construction so ``degree`` is
    honest (the zero polynomial has degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [_coerce(c) if not isinstance(c, GaussianRational) else c for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "RationalPoly":
        return RationalPoly([])

    @staticmethod
    def monomial(degree: int, coeff=1) -> "RationalPoly":
        return RationalPoly([GR_ZERO] * degree + [_coerce(coeff)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else GR_ZERO

    def __eq__(self, other):
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            [self.coeff(k) + other.coeff(k) for k in range(n)]
        )

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            [self.coeff(k) - other.coeff(k) for k in range(n)]
        )

    def __mul__(self, other):
        if isinstance(other, RationalPoly):
            if self.is_zero or other.is_zero:
                return RationalPoly.zero()
            out = [GR_ZERO] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return RationalPoly(out)
        c = _coerce(other)
        return RationalPoly([a * c for a in self.coeffs])

    __rmul__ = __mul__

    def derivative(self) -> "RationalPoly":
        return RationalPoly(
            [k * self.coeffs[k] for k in range(1, len(self.coeffs))]
        )

    def integral(self) -> "RationalPoly":
        """Antiderivative with zero constant term."""
        return RationalPoly(
            [GR_ZERO] + [self.coeffs[k] / Fraction(k + 1) for k in range(len(self.coeffs))]
        )

    def scale_argument(self, a) -> "RationalPoly":
        """p(a*x) for an exact scalar a."""
        a = _coerce(a)
        out, pw = [], GR_ONE
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * a
        return RationalPoly(out)

    def parity(self) -> int | None:
        """0 if even, 1 if odd, None if mixed (zero poly counts as both)."""
        even = all(c.is_zero for k, c in enumerate(self.coeffs) if k % 2 == 1)
        odd = all(c.is_zero for k, c in enumerate(self.coeffs) if k % 2 == 0)
        if even and odd:
            return 0
        if even:
            return 0
        if odd:
            return 1
        return None

    def eval_exact(self, x) -> GaussianRational:
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c.to_complex()
        return acc

    def eval_complex_array(self, x: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(x, dtype=complex)
        for c in reversed(self.coeffs):
            acc = acc * x + c.to_complex()
        return acc

    def __repr__(self):
        if self.is_zero:
            return "RationalPoly(0)"
        parts = [
            f"({c})x^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero
        ]
        return "RationalPoly(" + " + ".join(parts) + ")"


@lru_cache(maxsize=None)
def hermite_poly(n: int) -> RationalPoly:
    """Physicists' Hermite polynomial H_n, exact integer coefficients.

    H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}.
    """
    if n < 0:
        raise ValueError("Hermite index must be >= 0")
    if n == 0:
        return RationalPoly([GR_ONE])
    if n == 1:
        return RationalPoly([GR_ZERO, GaussianRational.of(2)])
    two_x = RationalPoly.monomial(1, 2)
    return two_x * hermite_poly(n - 1) - (2 * (n - 1)) * hermite_poly(n - 2)


# ----------------------------------------------------------------------
# floating jets
# ----------------------------------------------------------------------

class Jet:
    """Truncated Taylor series with complex coefficients.

    ``coeffs[k]`` is the coefficient of x^k; order = len(coeffs) - 1.
    Arithmetic requires both operands to share the order -- an order change
    is always explicit (``truncate``) so truncation bugs cannot hide.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[complex]):
        self.coeffs = np.asarray(coeffs, dtype=complex)
        if self.coeffs.ndim != 1 or len(self.coeffs) == 0:
            raise ValueError("jet needs a nonempty 1-d coefficient list")

    @staticmethod
    def constant(value: complex, order: int) -> "Jet":
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return Jet(c)

    @staticmethod
    def variable(value: complex, order: int) -> "Jet":
        """Jet of x |-> value + x."""
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        if order >= 1:
            c[1] = 1.0
        return Jet(c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def _check(self, other: "Jet"):
        if self.order != other.order:
            raise JetOrderError(
                f"jet order mismatch: {self.order} vs {other.order}"
            )

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise JetOrderError("cannot raise jet order by truncation")
        return Jet(self.coeffs[: order + 1].copy())

    def derivative_value(self, m: int) -> complex:
        """m-th derivative at the expansion point: m! * coeffs[m]."""
        if m > self.order:
            raise JetOrderError(f"jet order {self.order} < requested derivative {m}")
        return complex(self.coeffs[m]) * math.factorial(m)

    def __add__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            return Jet(self.coeffs + other.coeffs)
        c = self.coeffs.copy()
        c[0] += other
        return Jet(c)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.coeffs)

    def __sub__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            return Jet(self.coeffs - other.coeffs)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            n = self.order + 1
            out = np.convolve(self.coeffs, other.coeffs)[:n]
            return Jet(out)
        return Jet(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return jet_div(self, other)
        return Jet(self.coeffs / other)

    def exp(self) -> "Jet":
        u = self.coeffs
        n = self.order
        v = np.zeros(n + 1, dtype=complex)
        v[0] = cmath.exp(complex(u[0]))
        for k in range(1, n + 1):
            v[k] = sum(j * u[j] * v[k - j] for j in range(1, k + 1)) / k
        return Jet(v)

    def log(self) -> "Jet":
        u = self.coeffs
        z0 = complex(u[0])
        if z0.real <= 0.0 and z0.imag == 0.0:
            raise RauxError("jet log: constant term on the branch cut")
        n = self.order
        g = np.zeros(n + 1, dtype=complex)
        g[0] = cmath.log(z0)
        for k in range(1, n + 1):
            conv = sum(j * g[j] * u[k - j] for j in range(1, k))
            g[k] = (u[k] - conv / k) / z0
        return Jet(g)

    def compose(self, inner: "Jet") -> "Jet":
        """self(inner(x)); inner must have zero constant term."""
        self._check(inner)
        if inner.coeffs[0] != 0:
            raise RauxError("jet compose: inner constant term must be 0")
        n = self.order
        acc = Jet.constant(complex(self.coeffs[n]), n)
        for m in range(n - 1, -1, -1):
            acc = acc * inner + complex(self.coeffs[m])
        return acc

    def translate(self, delta: complex) -> "Jet":
        """Series recentered at (point + delta): out[j] = sum_i C(i,j) c_i delta^(i-j)."""
        n = self.order
        out = np.zeros(n + 1, dtype=complex)
        for j in range(n + 1):
            s = 0j  # Horner in delta over i = n..j
            for i in range(n, j - 1, -1):
                s = s * delta + math.comb(i, j) * self.coeffs[i]
            out[j] = s
        return Jet(out)

    def eval(self, dx: complex) -> complex:
        """Evaluate the truncated series at offset dx."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * dx + c
        return complex(acc)

    def __repr__(self):
        return f"Jet({list(self.coeffs)})"


def jet_div(a: Jet, b: Jet) -> Jet:
    """Truncated division a/b.

    If both constant terms vanish (removable 0/0), both series shift down a
    degree and the order drops by one; a lone vanishing denominator constant
    term is an error.
    """
    a._check(b)
    if b.coeffs[0] == 0:
        if a.coeffs[0] != 0:
            raise RauxError("jet division by series with vanishing constant term")
        if a.order == 0:
            raise JetOrderError("removable jet division needs order >= 1")
        return jet_div(Jet(a.coeffs[1:]), Jet(b.coeffs[1:]))
    n = a.order
    c = np.zeros(n + 1, dtype=complex)
    b0 = complex(b.coeffs[0])
    for k in range(n + 1):
        conv = sum(c[j] * b.coeffs[k - j] for j in range(k))
        c[k] = (a.coeffs[k] - conv) / b0
    return Jet(c)


def jet_algebra(a: Jet, b: Jet | None, op: str) -> Jet:
    """Single-entry dispatcher over the standard truncated-series operations.

    op in {add, mul, div, exp, log, compose}; exp/log ignore ``b``.
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return jet_div(a, b)
    if op == "exp":
        return a.exp()
    if op == "log":
        return a.log()
    if op == "compose":
        return a.compose(b)
    raise ValueError(f"unknown jet op {op!r}")


def hermite_decompose(u: RationalPoly, k: int) -> list[GaussianRational]:
    """Coefficients c_j with u = sum_j c_j H_{3k-2j}, j = 0..floor(3k/2), exact.

    u must have degree <= 3k and the parity of 3k.
    """
    top = 3 * k
    if u.degree > top:
        raise ParityError(f"degree {u.degree} exceeds 3k = {top}")
    if not u.is_zero and u.parity() is not None and u.parity() != top % 2:
        raise ParityError(f"polynomial parity does not match 3k = {top}")
    if u.parity() is None:
        raise ParityError("polynomial has mixed parity")
    rem = u
    out = []
    for j in range(top // 2 + 1):
        n = top - 2 * j
        lead = rem.coeff(n)
        c = lead / GaussianRational.of(2 ** n)  # H_n leading coefficient is 2^n
        out.append(c)
        if not c.is_zero:
            rem = rem - c * hermite_poly(n)
    if not rem.is_zero:
        raise ParityError("Hermite decomposition left a nonzero remainder")
    return out
