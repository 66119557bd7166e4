"""Exact generation of the expansion term coefficients.

The k-th term of the saddle expansion is assembled from derivatives of the
first-term function G:

    D_k(q) = pi^(-2k) * sum_{j=0}^{floor(3k/2)} (pi/2i)^j d_j^(k) G^(3k-2j)(q)

and the d_j^(k) are produced here twice, by independent exact routes that
the tests require to coincide:

1. the integer recurrence
       (6k-4j) d_j^(k) = -1/2 d_j^(k-1) - d_{j-1}^(k-1)
                         + 2(3k-2j)(3k-2j+1) d_{j-2}^(k-1)
   closed, when 3k is even, by the vanishing of the generating polynomial
   at the origin;
2. Hermite decomposition of the polynomials U_k, themselves obtained
   either by transforming the Taylor polynomials P_k of

       g(tau, z) = exp{ -i/(8 tau^2) log(1+2i tau z) - z/(4 tau) + i z^2/4 }

   in powers of tau, or by integrating the recurrence
       U_k' = -2x^2 U_{k-1} + 2x U_{k-1}'   (U_k(0) = 0 for k >= 1).

All arithmetic is big-integer rational; floats appear only at assembly.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import JetOrderError
from .jets import (
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    Jet,
    RationalPoly,
    hermite_decompose,
    hermite_poly,
)


@dataclass(frozen=True)
class CoeffTable:
    """Exact table of d_j^(k) for 0 <= k <= kmax, 0 <= j <= floor(3k/2)."""

    kmax: int
    entries: dict  # (k, j) -> Fraction

    def d(self, k: int, j: int) -> Fraction:
        return self.entries.get((k, j), Fraction(0))


@dataclass(frozen=True)
class PkTable:
    """Taylor polynomials P_k (in z) and their rotated forms U_k (in x)."""

    kmax: int
    p: tuple  # RationalPoly, index k
    u: tuple  # RationalPoly, index k


def build_d_table(kmax: int) -> CoeffTable:
    """Exact d_j^(k) by the integer recurrence with the even-3k closure."""
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    entries = {(0, 0): Fraction(1)}

    def d(k, j):
        return entries.get((k, j), Fraction(0))

    for k in range(1, kmax + 1):
        jtop = (3 * k) // 2
        for j in range(jtop + 1):
            if 6 * k == 4 * j:
                continue  # closure handles this entry
            rhs = (
                -Fraction(1, 2) * d(k - 1, j)
                - d(k - 1, j - 1)
                + 2 * (3 * k - 2 * j) * (3 * k - 2 * j + 1) * d(k - 1, j - 2)
            )
            entries[(k, j)] = rhs / (6 * k - 4 * j)
        if (3 * k) % 2 == 0:
            # generating polynomial vanishes at 0, fixing the j = 3k/2 entry
            m = 3 * k // 2
            acc = Fraction(0)
            for j in range(m):
                sign = -1 if (m - j) % 2 == 1 else 1
                acc += sign * entries[(k, j)] * (
                    math.factorial(3 * k - 2 * j) // math.factorial(m - j)
                )
            entries[(k, m)] = -acc
    return CoeffTable(kmax=kmax, entries=entries)


def _exponent_series(kmax: int, zdeg: int) -> list[RationalPoly]:
    """tau-series of the exponent of g as polynomials in z.

    After the 1/tau and constant orders cancel, the coefficient of tau^j
    (j >= 1) is a single monomial c z^(j+2) with
    c = (-1)^j i^(j+3) 2^(j-1) / (j+2).
    """
    out = [RationalPoly.zero()]
    for j in range(1, kmax + 1):
        n = j + 2
        ipow = (j + 3) % 4
        base = (GR_ONE, GaussianRational.of(0, 1),
                GaussianRational.of(-1), GaussianRational.of(0, -1))[ipow]
        c = base * Fraction((-1) ** j * 2 ** (j - 1), n)
        if n <= zdeg:
            out.append(RationalPoly.monomial(n, c))
        else:
            out.append(RationalPoly.zero())
    return out


def _poly_series_exp(es: list[RationalPoly], kmax: int) -> list[RationalPoly]:
    """exp of a poly-coefficient tau-series with zero constant term."""
    out = [RationalPoly([GR_ONE])]
    for k in range(1, kmax + 1):
        acc = RationalPoly.zero()
        for j in range(1, k + 1):
            acc = acc + Fraction(j) * (es[j] * out[k - j])
        out.append(Fraction(1, k) * acc)
    return out


@lru_cache(maxsize=None)
def build_pk(kmax: int) -> PkTable:
    """P_k by exact Taylor expansion in tau; U_k by the derivative recurrence.

    The two are linked by U_k(x) = ((1-i)/2)^k P_k((-1+i) x), which the
    tests verify; building U_k independently keeps the cross-check honest.
    """
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    ps = _poly_series_exp(_exponent_series(kmax, 3 * kmax), kmax)
    us = [RationalPoly([GR_ONE])]
    x = RationalPoly.monomial(1)
    x2 = RationalPoly.monomial(2)
    for k in range(1, kmax + 1):
        integrand = (-2) * (x2 * us[k - 1]) + 2 * (x * us[k - 1].derivative())
        us.append(integrand.integral())  # U_k(0) = 0 fixes the constant
    return PkTable(kmax=kmax, p=tuple(ps), u=tuple(us))


def u_from_p(p_k: RationalPoly, k: int) -> RationalPoly:
    """Rotation P_k -> U_k: U_k(x) = ((1-i)/2)^k P_k((-1+i) x)."""
    alpha = GaussianRational.of(Fraction(1, 2), Fraction(-1, 2)) ** k
    return alpha * p_k.scale_argument(GaussianRational.of(-1, 1))


@lru_cache(maxsize=None)
def default_tables(kmax: int = 8) -> tuple[CoeffTable, PkTable]:
    return build_d_table(kmax), build_pk(kmax)


def assemble_Dk(k: int, q: complex, g_jet: Jet, table: CoeffTable | None = None) -> complex:
    """D_k(q) from a jet of G at q of order >= 3k."""
    if table is None:
        table = default_tables(max(8, k))[0]
    if k > table.kmax:
        raise ValueError(f"coefficient table only reaches k = {table.kmax}")
    if g_jet.order < 3 * k:
        raise JetOrderError(f"need jet order >= {3 * k}, got {g_jet.order}")
    half_i = -0.5j  # 1/(2i)
    acc = 0j
    for j in range((3 * k) // 2 + 1):
        d = table.d(k, j)
        if d == 0:
            continue
        acc += (
            (math.pi * half_i) ** j
            * float(d)
            * g_jet.derivative_value(3 * k - 2 * j)
        )
    return acc / math.pi ** (2 * k)


def symbolic_dk(k: int, table: CoeffTable | None = None) -> dict:
    """Exact coefficient of each G-derivative in D_k.

    Returns {derivative order m: (pi power, GaussianRational coefficient)}
    with D_k = sum_m coeff * pi^power * G^(m); comparable term-by-term
    against the closed forms for small k.
    """
    if table is None:
        table = default_tables(max(8, k))[0]
    out = {}
    for j in range((3 * k) // 2 + 1):
        d = table.d(k, j)
        if d == 0:
            continue
        m = 3 * k - 2 * j
        # (1/2i)^j = (-i/2)^j exactly
        coeff = GaussianRational.of(0, Fraction(-1, 2)) ** j * d
        out[m] = (j - 2 * k, coeff)
    return out


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------

def _frac_str(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def _gr_dict(c: GaussianRational) -> dict:
    return {"re": _frac_str(c.re), "im": _frac_str(c.im)}


def tables_to_json(dtab: CoeffTable, ptab: PkTable) -> dict:
    """Cross-implementation golden-file format: all rationals as strings."""
    return {
        "kmax": dtab.kmax,
        "d": [
            {"k": k, "j": j, "value": _frac_str(dtab.entries[(k, j)])}
            for (k, j) in sorted(dtab.entries)
        ],
        "p": [[_gr_dict(c) for c in ptab.p[k].coeffs] for k in range(ptab.kmax + 1)],
        "u": [[_gr_dict(c) for c in ptab.u[k].coeffs] for k in range(ptab.kmax + 1)],
    }


def tables_to_csv(dtab: CoeffTable) -> str:
    lines = ["k,j,numerator,denominator"]
    for (k, j) in sorted(dtab.entries):
        fr = dtab.entries[(k, j)]
        lines.append(f"{k},{j},{fr.numerator},{fr.denominator}")
    return "\n".join(lines) + "\n"


def parse_tables_json(doc: dict) -> CoeffTable:
    entries = {}
    for row in doc["d"]:
        num, den = row["value"].split("/")
        entries[(row["k"], row["j"])] = Fraction(int(num), int(den))
    return CoeffTable(kmax=doc["kmax"], entries=entries)
