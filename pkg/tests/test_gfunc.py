import cmath
import math

import numpy as np
import pytest

from raux.errors import RauxError
from raux.gfunc import (
    from_strip,
    g_asymptotic,
    g_eval,
    g_eval_grid,
    g_jet,
    nonvanishing_certificate,
    strip_coords,
)

SQRT2 = math.sqrt(2.0)


class TestStripCoords:
    def test_origin(self):
        sp = strip_coords(0.0)
        assert sp.mu == 0.0 and sp.nu == 0.0

    def test_diagonal_unit(self):
        sp = strip_coords(cmath.exp(0.25j * math.pi))
        assert sp.mu == pytest.approx(1.0, abs=1e-15)
        assert sp.nu == pytest.approx(0.0, abs=1e-15)

    def test_real_point(self):
        sp = strip_coords(0.6419)
        assert sp.mu == pytest.approx(0.6419 / SQRT2, rel=1e-12)
        assert sp.nu == pytest.approx(-0.6419 / SQRT2, rel=1e-12)

    def test_reconstruction(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            q = complex(rng.normal(), rng.normal())
            sp = strip_coords(q)
            assert abs(from_strip(sp.mu, sp.nu) - q) < 1e-13 * (1 + abs(q))


class TestGEval:
    def test_value_at_zero(self):
        want = 1.0 - SQRT2 * cmath.exp(1j * math.pi / 8.0)
        assert g_eval(0.0) == pytest.approx(want, rel=1e-14)
        assert g_eval(0.0) == pytest.approx(-0.3065629648763766 - 0.541196100146197j)

    def test_removable_point_finite_and_continuous(self):
        v = g_eval(0.5)
        assert np.isfinite(v.real) and np.isfinite(v.imag)
        # numerator vanishes there: e^{i pi/8} - sqrt 2 e^{i pi/8} cos(pi/4) = 0
        num = cmath.exp(1j * math.pi / 8) - SQRT2 * cmath.exp(1j * math.pi / 8) * math.cos(math.pi / 4)
        assert abs(num) < 1e-15
        # series and direct quotient agree across the switch
        for d in (0.009, 0.011):
            a = g_eval(0.5 + d)
            direct = (
                cmath.exp(0.5j * math.pi * (0.5 + d) ** 2)
                - SQRT2 * cmath.exp(1j * math.pi / 8) * cmath.cos(0.5 * math.pi * (0.5 + d))
            ) / cmath.cos(math.pi * (0.5 + d))
            assert a == pytest.approx(direct, rel=1e-11)

    def test_evenness_on_strip(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            q = from_strip(rng.uniform(-6, 6), rng.uniform(-SQRT2, SQRT2))
            a, b = g_eval(q), g_eval(-q)
            assert abs(a - b) <= 1e-12 * max(abs(a), 1e-30)

    def test_grid_matches_scalar(self):
        qs = np.array([0.3 + 0.1j, 0.5, -1.5, 2.0 - 0.4j])
        grid = g_eval_grid(qs)
        for q, v in zip(qs, grid):
            assert v == pytest.approx(g_eval(complex(q)), rel=1e-13)


class TestGJet:
    def test_constant_term(self):
        assert g_jet(0.0, 0).derivative_value(0) == pytest.approx(g_eval(0.0), rel=1e-13)

    def test_first_derivative_vs_finite_difference(self):
        h = 1e-5
        fd = (g_eval(h) - g_eval(-h)) / (2 * h)
        assert abs(g_jet(0.0, 3).derivative_value(1) - fd) < 1e-8

    def test_second_derivative_vs_cauchy_ring(self):
        n = 512
        th = np.arange(n) * 2 * math.pi / n
        ring = np.exp(1j * th)
        vals = g_eval_grid(ring)
        c2 = np.mean(vals * np.exp(-2j * th))
        assert abs(g_jet(0.0, 2).coeffs[2] - c2) < 1e-10

    def test_order8_vs_cauchy_at_0p3(self):
        n = 2048
        th = np.arange(n) * 2 * math.pi / n
        ring = 0.3 + np.exp(1j * th)
        vals = g_eval_grid(ring)
        jet = g_jet(0.3, 8)
        for m in range(9):
            cm = np.mean(vals * np.exp(-1j * m * th))
            assert abs(cm - jet.coeffs[m]) < 1e-9

    def test_jet_at_removable_center(self):
        import mpmath as mp

        jet = g_jet(0.5, 8)
        assert jet.derivative_value(0) == pytest.approx(g_eval(0.5), rel=1e-12)
        # independent Taylor reference at a nearby regular point
        z = 0.75
        mine = g_jet(z, 8)
        with mp.workdps(40):
            f = lambda q: (
                mp.exp(0.5j * mp.pi * q * q)
                - mp.sqrt(2) * mp.exp(1j * mp.pi / 8) * mp.cos(0.5 * mp.pi * q)
            ) / mp.cos(mp.pi * q)
            ref = [complex(c) for c in mp.taylor(f, mp.mpf(z), 8)]
        for m in range(9):
            assert abs(mine.coeffs[m] - ref[m]) < 1e-10 * max(1.0, abs(ref[m]))


class TestAsymptotic:
    def test_relative_error_deep(self):
        q = 10.0 * cmath.exp(0.25j * math.pi)
        assert abs(g_eval(q) / g_asymptotic(q) - 1.0) < 1e-9

    def test_error_order_moderate(self):
        q = 3.0 * cmath.exp(0.25j * math.pi)
        err = abs(g_eval(q) / g_asymptotic(q) - 1.0)
        assert err < 10.0 * math.exp(-3.0 * math.pi / SQRT2)

    def test_error_rate_doubles(self):
        e1 = abs(g_eval(from_strip(4.0, 0.2)) / g_asymptotic(from_strip(4.0, 0.2)) - 1.0)
        e2 = abs(g_eval(from_strip(8.0, 0.2)) / g_asymptotic(from_strip(8.0, 0.2)) - 1.0)
        # log error roughly doubles in magnitude: rate -pi/sqrt2 per unit mu
        assert math.log(e2) / math.log(e1) == pytest.approx(2.0, abs=0.4)

    def test_precondition(self):
        with pytest.raises(RauxError):
            g_asymptotic(from_strip(-1.0, 0.0))


class TestBounds:
    def test_two_sided_decay_envelope(self):
        # c0 e^{-pi |mu|/(2 sqrt 2)} <= |G| <= C0 e^{...} with a narrow spread
        rng = np.random.default_rng(9)
        ratios = []
        for _ in range(400):
            mu = rng.uniform(-12, 12)
            nu = rng.uniform(-1 / SQRT2, 1 / SQRT2)
            g = abs(g_eval(from_strip(mu, nu)))
            ratios.append(g * math.exp(math.pi * abs(mu) / (2 * SQRT2)))
        assert max(ratios) / min(ratios) < 100.0


class TestCertificate:
    def test_certificate(self):
        cert = nonvanishing_certificate(0.01)
        assert cert.winding == 0
        assert cert.min_abs > 0.0
        assert cert.tail_margin > 0.0

    def test_step_guard(self):
        with pytest.raises(ValueError):
            nonvanishing_certificate(0.5)
