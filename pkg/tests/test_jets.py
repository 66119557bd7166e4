from fractions import Fraction

import numpy as np
import pytest

from raux.errors import JetOrderError, ParityError, RauxError
from raux.jets import (
    GaussianRational,
    Jet,
    RationalPoly,
    hermite_decompose,
    hermite_poly,
    jet_algebra,
    jet_div,
)


class TestGaussianRational:
    def test_arithmetic_exact(self):
        a = GaussianRational.of(Fraction(1, 3), Fraction(-2, 7))
        b = GaussianRational.of(Fraction(5, 2), Fraction(1, 3))
        assert (a * b / b) == a
        assert (a + b - b) == a
        assert a * a.conj() == GaussianRational.of(
            Fraction(1, 9) + Fraction(4, 49)
        )

    def test_powers(self):
        i = GaussianRational.of(0, 1)
        assert i ** 2 == GaussianRational.of(-1)
        assert i ** -1 == GaussianRational.of(0, -1)


class TestRationalPoly:
    def test_mul_and_derivative(self):
        p = RationalPoly([1, 2])  # 1 + 2x
        q = RationalPoly([3, 4])  # 3 + 4x
        assert (p * q).coeffs == RationalPoly([3, 10, 8]).coeffs
        assert (p * q).derivative() == RationalPoly([10, 16])

    def test_integral_inverts_derivative(self):
        p = RationalPoly([0, Fraction(1, 2), 7, Fraction(-3, 5)])
        assert p.derivative().integral() == p

    def test_scale_argument(self):
        p = RationalPoly([1, 0, 1])  # 1 + x^2
        q = p.scale_argument(GaussianRational.of(0, 1))  # x -> ix
        assert q == RationalPoly([1, 0, -1])

    def test_parity(self):
        assert RationalPoly([0, 1, 0, 5]).parity() == 1
        assert RationalPoly([2, 0, 3]).parity() == 0
        assert RationalPoly([1, 1]).parity() is None


class TestHermite:
    def test_small_values(self):
        assert hermite_poly(0) == RationalPoly([1])
        assert hermite_poly(2) == RationalPoly([-2, 0, 4])
        assert hermite_poly(3) == RationalPoly([0, -12, 0, 8])

    @pytest.mark.parametrize("n", range(1, 21))
    def test_derivative_identity(self, n):
        assert hermite_poly(n).derivative() == (2 * n) * hermite_poly(n - 1)

    @pytest.mark.parametrize("n", range(1, 21))
    def test_three_term_identity(self, n):
        x = RationalPoly.monomial(1)
        lhs = x * hermite_poly(n)
        rhs = Fraction(1, 2) * hermite_poly(n + 1) + n * hermite_poly(n - 1)
        assert lhs == rhs

    def test_decompose_examples(self):
        assert hermite_decompose(RationalPoly([1]), 0) == [GaussianRational.of(1)]
        row = hermite_decompose(RationalPoly([0, 0, 0, Fraction(-2, 3)]), 1)
        assert row == [
            GaussianRational.of(Fraction(-1, 12)),
            GaussianRational.of(Fraction(-1, 2)),
        ]
        basis = hermite_decompose(hermite_poly(6), 2)
        assert basis[0] == GaussianRational.of(1)
        assert all(c.is_zero for c in basis[1:])

    def test_decompose_parity_error(self):
        with pytest.raises(ParityError):
            hermite_decompose(RationalPoly([1, 1]), 1)
        with pytest.raises(ParityError):
            hermite_decompose(RationalPoly([0, 0, 0, 0, 1]), 1)  # degree 4 > 3


class TestJet:
    def test_exp_series(self):
        j = jet_algebra(Jet([0, 1, 0]), None, "exp")
        assert np.allclose(j.coeffs, [1.0, 1.0, 0.5])

    def test_removable_division(self):
        j = jet_algebra(Jet([0, 1]), Jet([0, 1]), "div")
        assert j.order == 0 and j.coeffs[0] == 1.0

    def test_division_errors(self):
        with pytest.raises(RauxError):
            jet_div(Jet([1, 0]), Jet([0, 1]))

    def test_mul_truncates(self):
        j = jet_algebra(Jet([1, 2]), Jet([3, 4]), "mul")
        assert np.allclose(j.coeffs, [3.0, 10.0])

    def test_exp_log_roundtrip(self):
        rng = np.random.default_rng(0)
        for _ in range(60):
            c = rng.normal(size=7) + 1j * rng.normal(size=7)
            c[0] = abs(c[0]) + 0.5  # constant term in the right half-plane
            a = Jet(c)
            b = jet_algebra(jet_algebra(a, None, "log"), None, "exp")
            assert np.max(np.abs(a.coeffs - b.coeffs)) < 1e-13

    def test_compose_against_sympy_style_reference(self):
        inner = Jet([0, 1, 0.5, 0.25])
        outer = Jet.variable(0.0, 3).exp()
        comp = jet_algebra(outer, inner, "compose")
        # exp(x + x^2/2 + x^3/4) = 1 + x + x^2 + 11/12 x^3 + O(x^4)
        assert np.allclose(comp.coeffs, [1.0, 1.0, 1.0, 11.0 / 12.0])

    def test_compose_requires_zero_constant(self):
        with pytest.raises(RauxError):
            Jet([1, 2]).compose(Jet([1, 1]))

    def test_order_mismatch(self):
        with pytest.raises(JetOrderError):
            Jet([1, 2]) + Jet([1, 2, 3])

    def test_derivative_value(self):
        j = Jet.variable(2.0, 5).exp()
        for m in range(6):
            assert j.derivative_value(m) == pytest.approx(np.exp(2.0), rel=1e-12)

    def test_translate(self):
        j = Jet.variable(0.0, 16).exp().translate(0.01)
        ref = Jet.variable(0.01, 16).exp()
        assert np.max(np.abs(j.coeffs[:8] - ref.coeffs[:8])) < 1e-15
