import cmath
import math

import numpy as np
import pytest

from raux.errors import BranchCutError
from raux.frames import left_frame, saddle_frame


class TestSaddleFrame:
    def test_pure_imaginary(self):
        fr = saddle_frame(50j)
        assert fr.xi == pytest.approx(5.0 / math.sqrt(math.pi), rel=1e-13)
        assert fr.xi.imag == pytest.approx(0.0, abs=1e-13)
        assert fr.ell == 2
        assert fr.q == pytest.approx(0.6419, abs=5e-5)

    def test_real_positive(self):
        fr = saddle_frame(8.0 * math.pi)
        assert fr.xi == pytest.approx(2.0 * cmath.exp(-0.25j * math.pi), rel=1e-13)
        assert fr.ell == 2  # floor(2 sqrt 2)

    def test_sector_and_strip_invariants(self):
        rng = np.random.default_rng(2)
        for _ in range(300):
            r = math.exp(rng.uniform(math.log(2 * math.pi), math.log(1e5)))
            a = rng.uniform(-math.pi + 1e-6, math.pi - 1e-6)
            s = complex(r * math.cos(a), r * math.sin(a))
            fr = saddle_frame(s)
            assert -0.75 * math.pi < cmath.phase(fr.xi) <= 0.25 * math.pi
            assert fr.ell >= 0
            d = fr.q.real - fr.q.imag
            assert -1.0 - 1e-12 <= d < 1.0 + 1e-12
            assert abs(fr.tau + 1.0 / (4.0 * math.sqrt(math.pi) * fr.xi)) < 1e-15
            # strip coordinates reconstruct q
            rec = complex(fr.strip.mu, fr.strip.nu) * cmath.exp(0.25j * math.pi)
            assert abs(rec - fr.q) < 1e-13 * (1 + abs(fr.q))

    def test_branch_cut(self):
        with pytest.raises(BranchCutError):
            saddle_frame(-10.0)


class TestLeftFrame:
    def test_real_axis_example(self):
        # s = 1 + 8 pi i puts eta exactly on the positive real axis
        fr = left_frame(1.0 + 8.0j * math.pi)
        assert fr.eta == pytest.approx(2.0, rel=1e-13)
        assert fr.m == 2

    def test_conjugacy_with_right_frame(self):
        rng = np.random.default_rng(4)
        n = 0
        while n < 200:
            s = complex(rng.uniform(-300, 300), rng.uniform(-300, 300))
            w = 1.0 - s.conjugate()
            if abs(s - 1) < 7 or abs(w) < 7:
                continue
            if w.imag == 0 and w.real <= 0:
                continue
            if (s - 1).imag == 0 and (s - 1).real >= 0:
                continue
            n += 1
            lf = left_frame(s)
            rf = saddle_frame(w)
            assert abs(lf.eta - rf.xi.conjugate()) < 1e-12 * abs(lf.eta)
            assert lf.m == rf.ell
            assert abs(lf.p - rf.q.conjugate()) < 1e-11 * (1 + abs(lf.p))

    def test_conj_p_in_strip(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            s = complex(rng.uniform(-400, -5), rng.uniform(-300, 300))
            fr = left_frame(s)
            pc = fr.p.conjugate()
            d = pc.real - pc.imag
            assert -1.0 - 1e-12 <= d < 1.0 + 1e-12

    def test_branch(self):
        with pytest.raises(BranchCutError):
            left_frame(5.0)  # s - 1 on [0, inf)
