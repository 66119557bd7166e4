"""The asymptotic expansions of R(s) and everything assembled from them.

Right-plane form (valid for |s| >= 2 pi off the negative real axis):

    R(s) = sum_{n<=ell} n^(-s)
           + (-1)^ell/(2i) xi^(-s) e^{i pi xi^2}
             { sum_{k<=K} D_k(q)/xi^k  +  truncation }

Left-plane form, from R(s) = chi(s) { zeta(1-s) - conj-R(1-s) } with the
mirrored expansion of conj-R(1-s) through eta, m, p:

    R(s) = chi(s) { [zeta(1-s) - sum_{n<=m} n^(s-1)]
           + (-1)^m/(2i) eta^(s-1) e^{-i pi eta^2}
             sum_{k<=K} conj(D_k)(p)/eta^k  + ... }

All prefactors are combined in log/phase form (they reach exp(pi t/2));
the bracketed zeta tail is evaluated cancellation-free.  The truncation
error carries the calibrated empirical constant; the theorems' own
constants are non-constructive.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .calibration import c_emp, load_calibration, zeta_sum_c
from .coeffs import assemble_Dk, default_tables
from .errors import RauxError, RegionError
from .frames import LeftFrame, SaddleFrame, left_frame, saddle_frame
from .gfunc import g_eval, g_jet, strip_coords
from .regions import RegionLabel, classify_region, in_Gset, in_L, in_M, in_N, phi_of_r
from .scaled import ScaledComplex, wrap_phase
from .special import chi, theta_rs, zeta_em, zeta_minus_partial, zeta_partial_sum

TWO_PI = 2.0 * math.pi
_SQRT8 = 2.0 * math.sqrt(2.0)


@dataclass(frozen=True)
class ExpansionResult:
    value: ScaledComplex
    k_used: int
    err_estimate: float  # empirical relative-error bound
    frame: SaddleFrame | LeftFrame | None
    region: RegionLabel


def _half_i_power(n: int) -> ScaledComplex:
    """(-1)^n / (2i) as a scaled value."""
    return ScaledComplex.from_polar(-math.log(2.0), -0.5 * math.pi + math.pi * n)


def _expand_right_core(s: complex, K: int, kmax: int | None = None):
    """Value, frame and prefactor log-magnitude; no error model."""
    table = default_tables(max(8, K if kmax is None else kmax))[0]
    if not (1 <= K <= table.kmax):
        raise RauxError(f"K must be in 1..{table.kmax}")
    fr = saddle_frame(s)
    jet = g_jet(fr.q, 3 * K)
    total = 0j
    xp = 1.0 + 0j
    for k in range(K + 1):
        total += assemble_Dk(k, fr.q, jet, table) / xp
        xp *= fr.xi
    pref = ScaledComplex.from_log(
        -s * cmath.log(fr.xi) + 1j * math.pi * fr.xi * fr.xi
    ).mul(_half_i_power(fr.ell))
    value = zeta_partial_sum(s, fr.ell).add(pref.mul_complex(total))
    return value, fr, pref.log_mod


def expand_right(s: complex, K: int, kmax: int | None = None) -> ExpansionResult:
    """K-term right-plane expansion; needs |s| >= 2 pi, s off (-inf, 0]."""
    s = complex(s)
    if abs(s) < TWO_PI:
        raise RegionError("right expansion needs |s| >= 2 pi")
    value, fr, pref_log = _expand_right_core(s, K, kmax)
    err_log = (
        math.log(c_emp(K))
        - math.pi * abs(fr.strip.mu) / _SQRT8
        - (K + 1) * math.log(abs(fr.xi))
        + pref_log
    )
    err = math.inf if value.is_zero else math.exp(err_log - value.log_mod)
    return ExpansionResult(
        value=value, k_used=K, err_estimate=err, frame=fr,
        region=classify_region(s),
    )


def _rbar_expansion(s: complex, K: int, kmax: int | None = None):
    """conj-R(1-s) = sum_{n<=m} n^(s-1) - (-1)^m/(2i) eta^(s-1) e^{-i pi eta^2}
    sum_k conj(D_k)(p)/eta^k; returns (value, frame, pref, term_sum)."""
    table = default_tables(max(8, K if kmax is None else kmax))[0]
    if not (1 <= K <= table.kmax):
        raise RauxError(f"K must be in 1..{table.kmax}")
    fr = left_frame(s)
    pc = fr.p.conjugate()
    jet = g_jet(pc, 3 * K)
    total = 0j
    ep = 1.0 + 0j
    for k in range(K + 1):
        total += assemble_Dk(k, pc, jet, table).conjugate() / ep
        ep *= fr.eta
    pref = ScaledComplex.from_log(
        (s - 1.0) * cmath.log(fr.eta) - 1j * math.pi * fr.eta * fr.eta
    ).mul(_half_i_power(fr.m))
    head = zeta_partial_sum(1.0 - s, fr.m)  # sum n^(s-1)
    value = head.sub(pref.mul_complex(total))
    return value, fr, pref, total


def expand_left(s: complex, K: int, kmax: int | None = None) -> ExpansionResult:
    """Left-plane expansion through the reflection identity.

    Valid when 1 - s lies in the right expansion's sector; exact zero at
    the trivial zeros s = -2n where the chi factor vanishes.
    """
    s = complex(s)
    if abs(s - 1.0) < TWO_PI:
        raise RegionError("left expansion needs |s - 1| >= 2 pi")
    ch = chi(s)
    fr = left_frame(s)
    if ch.is_zero:
        return ExpansionResult(
            value=ScaledComplex.zero(), k_used=K, err_estimate=0.0,
            frame=fr, region=classify_region(s),
        )
    table = default_tables(max(8, K if kmax is None else kmax))[0]
    if not (1 <= K <= table.kmax):
        raise RauxError(f"K must be in 1..{table.kmax}")
    pc = fr.p.conjugate()
    jet = g_jet(pc, 3 * K)
    total = 0j
    ep = 1.0 + 0j
    for k in range(K + 1):
        total += assemble_Dk(k, pc, jet, table).conjugate() / ep
        ep *= fr.eta
    pref = ScaledComplex.from_log(
        (s - 1.0) * cmath.log(fr.eta) - 1j * math.pi * fr.eta * fr.eta
    ).mul(_half_i_power(fr.m))
    tail = zeta_minus_partial(1.0 - s, fr.m)  # zeta(1-s) - sum n^(s-1)
    inner = tail.add(pref.mul_complex(total))
    value = ch.mul(inner)
    mu_p = strip_coords(pc).mu
    err_log = (
        math.log(c_emp(K))
        - math.pi * abs(mu_p) / _SQRT8
        - (K + 1) * math.log(abs(fr.eta))
        + pref.log_mod
        + ch.log_mod
    )
    err = math.inf if value.is_zero else math.exp(err_log - value.log_mod)
    return ExpansionResult(
        value=value, k_used=K, err_estimate=err, frame=fr,
        region=classify_region(s),
    )


def zeta_via_rs_scaled(s: complex, K: int, kmax: int | None = None) -> ScaledComplex:
    """zeta(s) = R(s) + chi(s) conj-R(1-s), both sides by their expansions.

    Needs t >= 2 pi so that both frames are valid (the wedge where the two
    expansions coexist).  Scaled result: the chi factor overflows binary64
    on the deep-left side of the wedge.
    """
    s = complex(s)
    if s.imag < TWO_PI:
        raise RegionError("combined formula needs Im s >= 2 pi")
    right = _expand_right_core(s, K, kmax)[0]
    rbar = _rbar_expansion(s, K, kmax)[0]
    return right.add(chi(s).mul(rbar))


def zeta_via_rs(s: complex, K: int, kmax: int | None = None) -> complex:
    return zeta_via_rs_scaled(s, K, kmax).to_complex()


def zeta_sum_approx(s: complex) -> dict:
    """Partial sum sum_{n<=ell} n^(-s) with the region-L error bound.

    bound = |s/(2 pi e)|^(-sigma/2) for t > 0, else the fitted
    exp(-c sqrt|s| / log|s|).
    """
    s = complex(s)
    if not in_L(s):
        raise RegionError("zeta-sum approximation is valid on region L only")
    fr = saddle_frame(s)
    total = zeta_partial_sum(s, fr.ell)
    if s.imag > 0:
        bound = abs(s / (TWO_PI * math.e)) ** (-0.5 * s.real)
    else:
        bound = math.exp(-zeta_sum_c() * math.sqrt(abs(s)) / math.log(abs(s)))
    return {"sum": total.to_complex(), "bound": bound, "ell": fr.ell}


def leading_third_quadrant(s: complex) -> ScaledComplex:
    """Leading term (-1)^ell/(2i) xi^(-s) e^{i pi xi^2} G(q) on the set M
    (membership for some admissible theta; the binding constraint is the
    upper arg bound)."""
    s = complex(s)
    if not _in_M_any_theta(s):
        raise RegionError("leading term valid on the third-quadrant set only")
    fr = saddle_frame(s)
    pref = ScaledComplex.from_log(
        -s * cmath.log(fr.xi) + 1j * math.pi * fr.xi * fr.xi
    ).mul(_half_i_power(fr.ell))
    return pref.mul_complex(g_eval(fr.q))


def _in_M_any_theta(s: complex) -> bool:
    from .regions import _2PI_E2

    if abs(s) <= _2PI_E2:
        return False
    if s.imag == 0.0 and s.real < 0.0:
        return False
    a = cmath.phase(s)
    log_xi = 0.5 * math.log(abs(s) / TWO_PI)
    return -math.pi < a < -0.5 * math.pi + math.atan(0.5 * math.pi / log_xi)


def half_line_neg_asymptotic(t: float) -> ScaledComplex:
    """Asymptotic value of R(1/2 - it) for large positive t:

        -(1/sqrt 2) (t/2 pi)^(-1/4) exp{pi t/2 - sqrt(pi t/2)}
        * exp{i (t/2 log(t/2 pi) - t/2 + 3 pi/8)}.
    """
    t = float(t)
    if t < 100.0:
        raise RauxError("asymptotic form enforced for t >= 100")
    log_mod = (
        0.5 * math.pi * t
        - math.sqrt(0.5 * math.pi * t)
        - 0.25 * math.log(t / TWO_PI)
        - 0.5 * math.log(2.0)
    )
    phase = 0.5 * t * math.log(t / TWO_PI) - 0.5 * t + 3.0 * math.pi / 8.0 + math.pi
    return ScaledComplex.from_polar(log_mod, wrap_phase(phase))


def eval_auto(s: complex, K: int = 6, theta: float = 0.25 * math.pi) -> ExpansionResult:
    """Region-dispatched evaluation of R(s).

    |s| < 2 pi -> quadrature oracle; right expansion on the Delta sector
    (always valid there) with the left form preferred on its home turf
    (N and the left wedge); oracle fallback elsewhere.
    """
    from .oracle import r_quad_origin_scaled

    s = complex(s)
    region = classify_region(s, theta)
    if abs(s) < TWO_PI:
        value = r_quad_origin_scaled(s)
        return ExpansionResult(value=value, k_used=0, err_estimate=1e-10,
                               frame=None, region=region)
    on_cut = s.imag == 0.0 and s.real <= 0.0
    if not on_cut and (s.real >= 0.0 or region.tag == "M"):
        return expand_right(s, K)
    if region.tag in ("N", "Gset") or (s.real < 0.0 and not on_cut):
        if abs(s - 1.0) >= TWO_PI:
            return expand_left(s, K)
    if not on_cut:
        return expand_right(s, K)
    if abs(s) <= 500.0:
        value = r_quad_origin_scaled(s)
        return ExpansionResult(value=value, k_used=0, err_estimate=1e-10,
                               frame=None, region=region)
    raise RegionError(f"no evaluator covers s = {s}")


def z_of_t(t: float, K: int = 6) -> float:
    """Riemann-Siegel Z(t) = 2 Re{ e^{i theta(t)} R(1/2 + it) }.

    Negative t reduces to Z(-t) (the conjugate form of the same identity);
    the critical-line R comes from the expansion when t is large enough,
    from the oracle otherwise.
    """
    t = float(t)
    if t < 0.0:
        return z_of_t(-t, K)
    s = complex(0.5, t)
    if t >= TWO_PI * math.e * math.e:
        value = expand_right(s, K).value
    else:
        from .oracle import r_quad_origin_scaled

        value = r_quad_origin_scaled(s)
    if value.is_zero:
        return 0.0
    return 2.0 * math.exp(value.log_mod) * math.cos(value.phase + theta_rs(t))


def left_bound_scan(points, K: int = 3) -> list[dict]:
    """Per-point ratios against the left-plane bounds.

    For each point (in its theorem's region): |R/chi| / log|s| on the left
    wedge, |R/chi| / ((t/2 pi)^(sigma/2) / |sigma|) on the subpolynomial
    strip, and the relative deviation from the single-term form
    chi (-1)^m/(2i) eta^(s-1) e^{-i pi eta^2} conj(G)(p) on N.
    """
    out = []
    for s in points:
        s = complex(s)
        rec: dict = {"s": s}
        res = expand_left(s, K)
        fr: LeftFrame = res.frame
        ch = chi(s)
        ratio_log = res.value.log_mod - ch.log_mod
        if s.real < 0 and in_Gset(s):
            rec["oldcor_ratio"] = math.exp(ratio_log) / math.log(abs(s))
        if s.imag > 0 and 1.0 < 1.0 - s.real < math.sqrt(s.imag):
            bound_log = 0.5 * s.real * math.log(s.imag / TWO_PI) - math.log(-s.real)
            rec["cor85_ratio"] = math.exp(ratio_log - bound_log)
        if in_N(s):
            pref = ScaledComplex.from_log(
                (s - 1.0) * cmath.log(fr.eta) - 1j * math.pi * fr.eta * fr.eta
            ).mul(_half_i_power(fr.m))
            lead = ch.mul(pref).mul_complex(
                g_eval(fr.p.conjugate()).conjugate()
            )
            rec["n_deviation"] = abs(res.value.div(lead).to_complex() - 1.0)
            rec["abs_eta"] = abs(fr.eta)
        out.append(rec)
    return out
