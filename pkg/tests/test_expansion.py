import cmath
import math

import numpy as np
import pytest

from raux.errors import RauxError, RegionError
from raux.expansion import (
    eval_auto,
    expand_left,
    expand_right,
    half_line_neg_asymptotic,
    leading_third_quadrant,
    z_of_t,
    zeta_sum_approx,
    zeta_via_rs,
)
from raux.frames import saddle_frame
from raux.oracle import r_quad_origin_scaled, r_quad_saddle_scaled
from raux.scaled import ScaledComplex
from raux.special import theta_rs, zeta_em

FLOOR = 1e-12


class TestExpandRight:
    def test_matches_oracle_on_critical_line(self):
        s = 0.5 + 200j
        res = expand_right(s, 3)
        oracle = r_quad_saddle_scaled(s)
        assert res.value.rel_diff(oracle) < 1e-6

    def test_coarse_sanity_moderate(self):
        # |R - 1| <= 3/4 holds qualitatively at moderate size with sigma >= 2
        val = expand_right(50.0 + 15j, 4).value.to_complex()
        assert abs(val - 1.0) <= 0.75

    def test_error_monotone_in_K(self):
        s = 0.5 + 200j
        oracle = r_quad_saddle_scaled(s)
        errs = [
            expand_right(s, K).value.sub(oracle).log_mod for K in (1, 2, 3, 4)
        ]
        for a, b in zip(errs, errs[1:]):
            assert b <= a + math.log(2.0)  # non-increasing up to factor-2 noise

    def test_rate_example(self):
        s = 0.5 + 200j
        oracle = r_quad_saddle_scaled(s)
        e2 = expand_right(s, 2).value.sub(oracle)
        e3 = expand_right(s, 3).value.sub(oracle)
        ratio = math.exp(e2.log_mod - e3.log_mod)
        xi = abs(saddle_frame(s).xi)
        assert xi / 4.0 <= ratio <= 4.0 * xi

    def test_region_guard(self):
        with pytest.raises(RegionError):
            expand_right(1.0 + 1j, 2)
        with pytest.raises(RauxError):
            expand_right(0.5 + 200j, 0)


class TestExpandLeft:
    def test_matches_oracle(self):
        s = -30.0 + 3j
        res = expand_left(s, 4)
        assert res.value.rel_diff(r_quad_origin_scaled(s)) < 1e-4

    def test_trivial_zeros_exact(self):
        for n in (5, 6, 7, 8, 9, 10):
            assert expand_left(complex(-2.0 * n, 0.0), 3).value.is_zero

    def test_overlap_wedge_consistency(self):
        s = -5.0 + 300j
        a = expand_right(s, 6).value
        b = expand_left(s, 6).value
        assert a.rel_diff(b) < 1e-8


class TestZetaViaRS:
    def test_acceptance_points(self):
        for s in (0.5 + 300j, 2.0 + 50j):
            approx = zeta_via_rs(s, 8)
            exact = zeta_em(s)
            assert abs(approx - exact) <= 1e-7 * abs(exact)

    def test_truncation_rate(self):
        s = 0.5 + 300j
        exact = zeta_em(s)
        e1 = abs(zeta_via_rs(s, 1) - exact)
        e4 = abs(zeta_via_rs(s, 4) - exact)
        xi3 = abs(saddle_frame(s).xi) ** 3
        assert xi3 / 10.0 <= e1 / e4 <= 10.0 * xi3

    def test_region_guard(self):
        with pytest.raises(RegionError):
            zeta_via_rs(2.0 + 1j, 4)


class TestReflectionInvariant:
    def test_right_plus_chi_conj_right(self):
        from raux.expansion import zeta_via_rs_scaled
        from raux.special import zeta_em_scaled

        rng = np.random.default_rng(23)
        samples = []
        while len(samples) < 12:
            r = math.exp(rng.uniform(math.log(100.0), math.log(2000.0)))
            a = rng.uniform(0.45, math.pi - 0.45)
            s = complex(r * math.cos(a), r * math.sin(a))
            if s.imag < 2 * math.pi + 1.0:
                continue
            samples.append(s)
        # critical-strip points, where the two pieces genuinely balance
        samples += [complex(1.5, 150.0), complex(0.2, 800.0), complex(2.5, 400.0)]
        for s in samples:
            diff = zeta_via_rs_scaled(s, 8).rel_diff(zeta_em_scaled(s))
            assert diff <= 1e-7, (s, diff)


class TestZetaSumApprox:
    def test_positive_t_bound(self):
        rec = zeta_sum_approx(100.0 + 100j)
        R = r_quad_saddle_scaled(100.0 + 100j)
        diff = R.sub(ScaledComplex.from_complex(rec["sum"]))
        floor = FLOOR * math.exp(R.log_mod)
        assert math.exp(diff.log_mod) <= max(10.0 * rec["bound"], floor)

    def test_negative_t_branch(self):
        s = 600.0 - 200j
        from raux.regions import in_L

        assert in_L(s)
        rec = zeta_sum_approx(s)
        R = r_quad_saddle_scaled(s)
        diff = R.sub(ScaledComplex.from_complex(rec["sum"]))
        floor = FLOOR * math.exp(R.log_mod)
        assert math.exp(diff.log_mod) <= max(10.0 * rec["bound"], floor)

    def test_region_guard(self):
        with pytest.raises(RegionError):
            zeta_sum_approx(-100.0 - 100j)


class TestThirdQuadrant:
    def test_ratio_error_order(self):
        s = 1000.0 * cmath.exp(-0.75j * math.pi)
        lead = leading_third_quadrant(s)
        oracle = r_quad_saddle_scaled(s)
        dev = abs(oracle.div(lead).to_complex() - 1.0)
        assert dev * abs(saddle_frame(s).xi) < 1.0

    def test_doubling_halves_deviation(self):
        devs = []
        for r in (500.0, 2000.0):
            s = r * cmath.exp(-0.75j * math.pi)
            dev = abs(
                r_quad_saddle_scaled(s).div(leading_third_quadrant(s)).to_complex() - 1.0
            )
            devs.append(dev)
        # |s| quadrupled => |xi| doubled => deviation halves, within factor 3
        assert devs[0] / devs[1] == pytest.approx(2.0, rel=1.5)

    def test_region_guard(self):
        with pytest.raises(RegionError):
            leading_third_quadrant(100.0 + 100j)


class TestHalfLine:
    def test_structure(self):
        t = 1.0e4
        v = half_line_neg_asymptotic(t)
        want = (
            0.5 * math.pi * t
            - math.sqrt(0.5 * math.pi * t)
            - 0.25 * math.log(t / (2 * math.pi))
            - 0.5 * math.log(2.0)
        )
        assert v.log_mod == pytest.approx(want, rel=1e-15)

    def test_matches_expansion(self):
        t = 1.0e4
        val = expand_right(complex(0.5, -t), 6).value
        ratio = val.div(half_line_neg_asymptotic(t)).to_complex()
        assert abs(ratio - 1.0) <= 10.0 / math.sqrt(t)

    def test_rate(self):
        errs = []
        for t in (1e3, 4e3):
            val = expand_right(complex(0.5, -t), 6).value
            errs.append(abs(val.div(half_line_neg_asymptotic(t)).to_complex() - 1.0))
        assert errs[0] / errs[1] == pytest.approx(2.0, rel=1.0)

    def test_domain(self):
        with pytest.raises(RauxError):
            half_line_neg_asymptotic(50.0)


class TestZ:
    def test_against_independent_zeta(self):
        for t in (100.0, 500.0):
            ref = (cmath.exp(1j * theta_rs(t)) * zeta_em(complex(0.5, t))).real
            assert abs(z_of_t(t) - ref) < 1e-8

    def test_first_zero_bracket(self):
        assert z_of_t(14.0) * z_of_t(14.3) < 0.0

    def test_even(self):
        assert z_of_t(-50.0) == z_of_t(50.0)


class TestEvalAuto:
    def test_small_s_uses_oracle(self):
        res = eval_auto(2.0 + 1j)
        assert res.k_used == 0

    def test_dispatch_covers_plane(self):
        rng = np.random.default_rng(31)
        for _ in range(40):
            s = complex(rng.uniform(-900, 900), rng.uniform(-900, 900))
            if s.imag == 0.0 and s.real <= 0:
                continue
            res = eval_auto(s, 4)
            assert np.isfinite(res.value.log_mod) or res.value.is_zero
