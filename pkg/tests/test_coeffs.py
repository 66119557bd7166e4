import json
import math
from fractions import Fraction

import pytest

from raux.coeffs import (
    assemble_Dk,
    build_d_table,
    build_pk,
    default_tables,
    parse_tables_json,
    symbolic_dk,
    tables_to_csv,
    tables_to_json,
    u_from_p,
)
from raux.errors import JetOrderError
from raux.gfunc import g_jet
from raux.jets import GaussianRational, RationalPoly, hermite_decompose


class TestDTable:
    def test_seed_and_first_row(self):
        dt = build_d_table(2)
        assert dt.d(0, 0) == 1
        assert dt.d(1, 0) == Fraction(-1, 12)
        assert dt.d(1, 1) == Fraction(-1, 2)

    def test_out_of_range_zero(self):
        dt = build_d_table(2)
        assert dt.d(1, 5) == 0
        assert dt.d(2, -1) == 0


class TestPk:
    def test_first_polys(self):
        pt = build_pk(2)
        assert pt.p[0] == RationalPoly([1])
        assert pt.p[1] == RationalPoly([0, 0, 0, Fraction(-1, 3)])
        assert pt.u[1] == RationalPoly([0, 0, 0, Fraction(-2, 3)])

    @pytest.mark.parametrize("k", range(13))
    def test_degree_and_parity(self, k):
        pt = build_pk(12)
        if k == 0:
            assert pt.p[k].degree == 0
            return
        assert pt.p[k].degree == 3 * k
        assert pt.p[k].parity() == (3 * k) % 2
        assert pt.p[k].coeff(0).is_zero  # vanishes at the origin

    def test_u_routes_coincide(self):
        pt = build_pk(8)
        for k in range(9):
            assert u_from_p(pt.p[k], k) == pt.u[k]

    def test_dual_derivation_exact(self):
        dt = build_d_table(8)
        pt = build_pk(8)
        for k in range(9):
            row = hermite_decompose(pt.u[k], k)
            for j, c in enumerate(row):
                assert c.is_real
                assert c.re == dt.d(k, j)

    def test_even_closure_consistency(self):
        # for even 3k the closure entry must equal the decomposition's
        dt = build_d_table(8)
        pt = build_pk(8)
        for k in (2, 4, 6, 8):
            j = 3 * k // 2
            row = hermite_decompose(pt.u[k], k)
            assert row[j].re == dt.d(k, j)


class TestAssembly:
    def test_symbolic_matches_closed_forms(self):
        want_d1 = {
            1: (-1, GaussianRational.of(0, Fraction(1, 4))),
            3: (-2, GaussianRational.of(Fraction(-1, 12))),
        }
        assert symbolic_dk(1) == want_d1

    def test_term_zero_is_g(self):
        q = 0.37 - 0.21j
        jet = g_jet(q, 0)
        from raux.gfunc import g_eval

        assert assemble_Dk(0, q, jet) == pytest.approx(g_eval(q), rel=1e-13)

    def test_term_one_structure(self):
        # D_1 = (i G' / pi - G''' / (3 pi^2)) / 4
        q = 0.3
        jet = g_jet(q, 3)
        d1 = assemble_Dk(1, q, jet)
        manual = (
            1j / math.pi * jet.derivative_value(1)
            - jet.derivative_value(3) / (3 * math.pi ** 2)
        ) / 4.0
        assert d1 == pytest.approx(manual, rel=1e-13)

    def test_term_one_vs_quadrature(self):
        from raux.oracle import dk_quad

        q = 0.3
        d1 = assemble_Dk(1, q, g_jet(q, 3))
        assert abs(d1 - dk_quad(q, 1)) < 1e-8

    def test_jet_order_guard(self):
        with pytest.raises(JetOrderError):
            assemble_Dk(2, 0.3, g_jet(0.3, 3))


def test_serialization_roundtrip():
    dt, pt = default_tables(4)[0], build_pk(4)
    doc = tables_to_json(dt, pt)
    text = json.dumps(doc)
    back = parse_tables_json(json.loads(text))
    assert back.entries == dt.entries
    csv = tables_to_csv(dt)
    assert csv.splitlines()[0] == "k,j,numerator,denominator"
    assert any(line.startswith("1,0,-1,12") for line in csv.splitlines())
