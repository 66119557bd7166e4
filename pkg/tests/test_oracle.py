import cmath
import math

import numpy as np
import pytest

from raux.coeffs import assemble_Dk
from raux.errors import ConditioningError, PoleProximityError
from raux.gfunc import from_strip, g_eval, g_jet
from raux.oracle import (
    QuadratureSpec,
    d0_quad,
    dk_quad,
    g_of_tau_z,
    inequality_scans,
    lemma_I,
    r_quad_origin,
    r_quad_origin_scaled,
    r_quad_saddle,
    r_quad_saddle_scaled,
    rg_remainder_contour,
    rg_remainder_direct,
    u_region,
)
from raux.scaled import ScaledComplex
from raux.special import chi, zeta_em


class TestROrigin:
    def test_trivial_zero(self):
        assert abs(r_quad_origin(-10.0)) < 1e-10

    def test_reflection_value_at_two(self):
        val = r_quad_origin(2.0) + chi(2.0).to_complex() * np.conj(
            r_quad_origin(-1.0)
        )
        assert val == pytest.approx(math.pi ** 2 / 6.0, rel=1e-12)

    def test_cap(self):
        with pytest.raises(ConditioningError):
            r_quad_origin(600.0 + 10j)


class TestPathIndependence:
    def test_overlap_samples(self):
        rng = np.random.default_rng(17)
        n = 0
        worst = 0.0
        while n < 20:
            r = math.exp(rng.uniform(math.log(2 * math.pi), math.log(500.0)))
            a = rng.uniform(-math.pi + 0.2, math.pi - 0.2)
            s = complex(r * math.cos(a), r * math.sin(a))
            n += 1
            va = r_quad_origin_scaled(s)
            vb = r_quad_saddle_scaled(s)
            worst = max(worst, va.rel_diff(vb))
        assert worst < 1e-9

    def test_doubling_stability(self):
        s = 0.5 + 30j
        a = r_quad_saddle(s)
        spec = QuadratureSpec(half_width=7.0, nodes=4001, rel_tol=1e-13)
        b = r_quad_saddle(s, spec)
        assert abs(a - b) < 1e-12 * abs(a)


class TestTermIntegrals:
    def test_d0_equals_g(self):
        for q in (0.0, 0.5, 0.3 - 0.2j, 2.0 + 2.0j):
            assert abs(d0_quad(q) - g_eval(q)) < 1e-10

    def test_d1_two_routes(self):
        q = 0.3 - 0.2j
        assert abs(dk_quad(q, 1) - assemble_Dk(1, q, g_jet(q, 3))) < 1e-8

    def test_removable_point(self):
        assert abs(d0_quad(0.5) - g_eval(0.5)) < 1e-9


class TestRemainder:
    def test_prefactor_order(self):
        rg = rg_remainder_direct(0.01, 1.0, 2)
        assert abs(rg) < 10.0 * abs(2 * 0.01 * 1.0) ** 3

    def test_zero_argument(self):
        assert rg_remainder_direct(0.05, 0.0, 3) == 0

    def test_direct_vs_contour(self):
        for tau, z, K in ((0.01, 1.0, 2), (0.03, 0.7, 1), (0.02, -0.5 + 0.3j, 2)):
            a = rg_remainder_direct(tau, z, K)
            b = rg_remainder_contour(tau, z, K)
            assert abs(a - b) <= 1e-8 * max(abs(a), abs(b), 1e-12)

    def test_degenerate_pole_rejected(self):
        with pytest.raises(PoleProximityError):
            rg_remainder_contour(0.4j, 1.0, 1)  # -2 i z tau = 0.8 not left of L

    def test_g_of_tau_z_matches_series_head(self):
        # g = 1 - z^3 tau / 3 + O(tau^2)
        tau, z = 1e-4, 0.9
        approx = 1.0 - z ** 3 * tau / 3.0
        assert g_of_tau_z(tau, z) == pytest.approx(approx, abs=1e-7)


class TestAppendixScans:
    def test_lemma_I_value(self):
        #  int e^{-x^2 - |x|} dx, by quadrature elsewhere and closed form here
        from scipy.special import erfc

        ref = math.exp(0.25) * math.sqrt(math.pi) * erfc(0.5)
        assert lemma_I(1.0, 0.0) == pytest.approx(ref, rel=1e-10)

    def test_u_at_origin(self):
        assert u_region(math.e, 0.0) == pytest.approx(-math.pi, abs=1e-15)

    def test_full_report(self):
        rep = inequality_scans()
        assert rep.all_ok
        assert rep.f_max < 0.0
        assert rep.du_min > 0.0
        for a in (0.1, 1.0, 10.0):
            assert math.isfinite(rep.i_sup[a])
            # weighted sup stays under the lemma proof's own constant
            assert rep.i_sup[a] <= 1.01 * rep.i_proof_bound[a]
        for key, sup in rep.j_sup.items():
            assert sup <= 1.01 * rep.j_proof_bound[key]


class TestReflectionIdentityOracleSide:
    def test_uno_residual_dominant_scale(self):
        rng = np.random.default_rng(11)
        n, worst = 0, 0.0
        while n < 20:
            r = 60.0 * math.sqrt(rng.uniform(0, 1))
            th = rng.uniform(-math.pi, math.pi)
            s = complex(r * math.cos(th), r * math.sin(th))
            if abs(s) < 1.0 or abs(s - 1.0) < 1.0:
                continue
            n += 1
            lhs = r_quad_origin_scaled(s)
            ch = chi(s)
            zt = ScaledComplex.from_complex(zeta_em(1.0 - s))
            rb = r_quad_origin_scaled(1.0 - s.conjugate()).conj()
            resid = lhs.sub(ch.mul(zt.sub(rb)))
            if resid.is_zero:
                continue
            scale = max(lhs.log_mod, ch.log_mod + max(zt.log_mod, rb.log_mod))
            worst = max(worst, math.exp(resid.log_mod - scale))
        assert worst < 1e-9
