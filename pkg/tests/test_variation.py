import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st
from scipy import integrate as si

from bombieri.errors import DomainError, RangeError
from bombieri.quadrature import QuadratureConfig
from bombieri.variation import (
    LINEAR, SIGMA_32, PhiWeight, Q_assembled, Q_closed, Q_numeric, double_integral_closed,
    double_integral_numeric, inner_integral_closed, inner_integral_numeric,
    inverse_fourth_power_coeffs, leung_qn, q_n_closed, q_series_coefficients, series_mul,
    sigma_ratio_bound, varphi_growth,
)

# 40-digit mpmath quadrature values
J_REF = {-0.2: 0.60300566479164915113, 0.1: 0.47085282723243743123, 1: 0.34836165729157904017}
D_REF = {-0.2: -0.25751416197912286354, 0.1: -0.14573586383781283574, 1: -0.075819171354210479915}
W_GRID = [-0.2, -0.1, 0.1, 0.5, 1, 2, 5, 10]


def scipy_inner(w):
    return si.quad(lambda u: (1 - u) / math.sqrt(1 + 4 * u * w), 0, 1, epsabs=1e-13)[0]


def scipy_double(w):
    return si.dblquad(lambda v, u: -(1 - u) / math.sqrt((1 + 4 * u * w) * (1 + 4 * v * w)),
                      0, 1, 0, lambda u: u, epsabs=1e-13)[0]


class TestClosedIntegrals:
    def test_inner_examples(self):
        assert inner_integral_closed(2) == pytest.approx(7 / 24, abs=1e-15)
        assert inner_integral_closed(1e-9) == pytest.approx(0.5, abs=1e-8)
        assert inner_integral_closed(-0.2) == pytest.approx(J_REF[-0.2], abs=1e-10)

    def test_double_examples(self):
        assert double_integral_closed(2) == pytest.approx(-5 / 96, abs=1e-15)
        assert double_integral_closed(1e-9) == pytest.approx(-1 / 6, abs=1e-8)
        assert double_integral_closed(1) == pytest.approx((5 * math.sqrt(5) - 13) / 24, abs=1e-15)

    @pytest.mark.parametrize("w", sorted(J_REF))
    def test_against_frozen_quadrature(self, w):
        assert inner_integral_closed(w) == pytest.approx(J_REF[w], abs=1e-12)
        assert double_integral_closed(w) == pytest.approx(D_REF[w], abs=1e-12)

    @pytest.mark.parametrize("w", W_GRID)
    def test_against_scipy(self, w):
        assert inner_integral_closed(w) == pytest.approx(scipy_inner(w), abs=1e-10)
        assert double_integral_closed(w) == pytest.approx(scipy_double(w), abs=1e-10)

    @pytest.mark.parametrize("w", W_GRID)
    def test_against_own_quadrature(self, w):
        assert inner_integral_closed(w) == pytest.approx(inner_integral_numeric(w), abs=1e-11)
        assert double_integral_closed(w) == pytest.approx(double_integral_numeric(w), abs=1e-11)

    def test_series_branch_continuity(self):
        for w in (9.99e-5, -9.99e-5, 3e-5):
            ref_j = (math.pow(1 + 4 * w, 1.5) - 6 * w - 1) / (12 * w * w)
            assert inner_integral_closed(w) == pytest.approx(ref_j, abs=1e-7)
            assert inner_integral_closed(w) == pytest.approx(inner_integral_numeric(w), abs=1e-12)
            assert double_integral_closed(w) == pytest.approx(double_integral_numeric(w), abs=1e-12)

    def test_domain(self):
        for f in (inner_integral_closed, double_integral_closed):
            with pytest.raises(DomainError):
                f(-0.25)
        with pytest.raises(DomainError):
            Q_closed(-0.3)


class TestQ:
    def test_examples(self):
        assert Q_closed(0) == 0
        assert Q_closed(2) == pytest.approx(-3, abs=1e-14)
        assert Q_closed(-0.25) == 0

    @pytest.mark.parametrize("w", W_GRID)
    def test_numeric_matches_closed(self, w):
        assert abs(Q_numeric(w, LINEAR) - Q_closed(w)) <= 1e-8

    @pytest.mark.parametrize("w", W_GRID + [3e-5])
    def test_assembly(self, w):
        assert abs(Q_assembled(w) - Q_closed(w)) <= 1e-10

    @pytest.mark.parametrize("c", [-2, 0.5, 3])
    def test_homogeneity(self, c):
        for w in (0.5, 2):
            assert abs(Q_numeric(w, LINEAR.scaled(c)) - c * c * Q_numeric(w, LINEAR)) <= 1e-9

    def test_zero_weight(self):
        assert Q_numeric(1.5, LINEAR.scaled(0)) == 0

    def test_assembly_general_weight(self):
        # integration by parts holds for any weight, not just 1 - u
        phi = PhiWeight("table", 1.0, (1.0, 0.7, 0.9, 0.2, 0.0))
        cfg = QuadratureConfig(1e-11)
        for w in (-0.15, 0.8):
            J = inner_integral_numeric(w, phi, cfg)
            D = double_integral_numeric(w, phi, cfg)
            assembled = -w * w * (phi.at_zero * J + 3 * w * J * J + D)
            assert Q_numeric(w, phi, cfg) == pytest.approx(assembled, abs=1e-9)

    def test_closed_form_from_sympy(self):
        w = sp.symbols("w")
        J = ((1 + 4 * w) ** sp.Rational(3, 2) - 6 * w - 1) / (12 * w**2)
        D = ((1 + 4 * w) ** sp.Rational(3, 2) - 6 * w**2 - 6 * w - 1) / (24 * w**3)
        Q = (1 + 4 * w) / 6 * (sp.sqrt(1 + 4 * w) - 1 - 2 * w)
        assert sp.simplify(-w**2 * (J + 3 * w * J**2 + D) - Q) == 0


class TestCoefficients:
    def test_examples(self):
        q = q_series_coefficients(10)
        assert q[0] == Fraction(-1, 3)
        assert q[1] == -2
        assert q[2] == Fraction(-19, 3)
        assert q_n_closed(10) == -163

    def test_series_equals_closed_form(self):
        q = q_series_coefficients(200)
        assert len(q) == 199
        assert all(qn == q_n_closed(n) for n, qn in zip(range(2, 201), q))

    def test_leung_normalization(self):
        assert leung_qn(2) == Fraction(-4, 3)
        assert leung_qn(3) == -8
        assert all(leung_qn(n) == 4 * q_n_closed(n) for n in range(2, 101))

    def test_inverse_fourth_power_by_division(self):
        # oracle: (1 - z)^4 * sum c_k z^k == 1
        c = inverse_fourth_power_coeffs(30)
        prod = series_mul([1, -4, 6, -4, 1], c, 30)
        assert prod == [1] + [0] * 29

    def test_composition_with_koebe(self):
        # oracle: expand Q(K(z)) directly, independent of the simplified q(z)
        z = sp.symbols("z")
        K = z / (1 - z) ** 2
        Q = (1 + 4 * K) / 6 * ((1 + z) / (1 - z) - 1 - 2 * K)  # sqrt(1+4K) = (1+z)/(1-z) near 0
        ser = sp.series(Q, z, 0, 13).removeO()
        poly = sp.Poly(ser, z)
        got = q_series_coefficients(12)
        for n in range(2, 13):
            assert Fraction(str(poly.coeff_monomial(z**n))) == got[n - 2]
        assert sp.series(sp.sqrt(1 + 4 * K) - (1 + z) / (1 - z), z, 0, 12).removeO() == 0


class TestRatioBound:
    def test_examples(self):
        assert sigma_ratio_bound(3, 2) == (Fraction(1, 6), Fraction(1, 4), True)
        assert sigma_ratio_bound(4, 2) == (Fraction(1, 19), Fraction(1, 10), True)
        assert SIGMA_32 == pytest.approx(0.15803, abs=1e-5)
        assert SIGMA_32 <= 1 / 6

    def test_strict_everywhere(self):
        for m in range(3, 101):
            for n in range(2, m):
                assert sigma_ratio_bound(m, n)[2]

    def test_range(self):
        with pytest.raises(RangeError):
            sigma_ratio_bound(3, 3)


class TestVarphi:
    def test_examples(self):
        v, d = varphi_growth(2)
        assert v == pytest.approx(0.5) and d == pytest.approx(0.25)
        assert varphi_growth((1 + math.sqrt(3)) / 2)[1] == pytest.approx(0, abs=1e-15)

    @pytest.mark.parametrize("x", [2, 5, 10])
    def test_finite_differences(self, x):
        h = 1e-5
        fd = (varphi_growth(x + h)[0] - varphi_growth(x - h)[0]) / (2 * h)
        assert fd == pytest.approx(varphi_growth(x)[1], rel=1e-6)

    @given(st.floats(1.37, 1e4))
    def test_increasing(self, x):
        assert varphi_growth(x)[1] > 0
