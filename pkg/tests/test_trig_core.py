import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bombieri.errors import ConfigError, DomainError, RangeError
from bombieri.trig_core import (
    MinimizeConfig, RatioProfile, check_lemma3, endpoint_limits, eval_A, eval_phi, eval_Phi,
    golden_refine, kernel_sum, minimize_B, normalized_A,
)

PI = math.pi

# sin(5)/sin(1), 40-digit mpmath evaluation
SIN5_OVER_SIN1 = -1.13958091482150860327347282519702514238


def direct_A(n, t):
    return n - math.sin(n * t) / math.sin(t)


class TestKernelSum:
    def test_examples(self):
        assert kernel_sum(2, PI / 3) == pytest.approx(1.0, abs=1e-15)
        assert kernel_sum(3, 0.0) == 3.0
        assert kernel_sum(5, 1.0) == pytest.approx(SIN5_OVER_SIN1, rel=1e-13)

    def test_limit_at_pi(self):
        # oracle: the plain quotient evaluated just off the singularity
        oracle = [math.sin(4 * t) / math.sin(t) for t in (PI - 1e-6, PI + 1e-6)]
        assert kernel_sum(4, PI) == -4.0
        for v in oracle:
            assert kernel_sum(4, PI) == pytest.approx(v, abs=1e-10)

    def test_vectorized_matches_scalar(self):
        t = np.linspace(-3, 7, 11)
        np.testing.assert_allclose(kernel_sum(6, t), [kernel_sum(6, x) for x in t])

    def test_rejects_n_zero(self):
        with pytest.raises(DomainError):
            kernel_sum(0, 1.0)

    @settings(max_examples=300)
    @given(st.integers(1, 100), st.floats(-20, 20))
    def test_consistent_with_quotient(self, n, t):
        if abs(math.sin(t)) > 1e-3:
            assert abs(kernel_sum(n, t) - math.sin(n * t) / math.sin(t)) <= 1e-10


class TestEvalA:
    def test_examples(self):
        assert eval_A(2, PI) == pytest.approx(4.0, abs=1e-14)
        assert eval_A(3, PI) == 0.0
        assert eval_A(3, PI / 2) == pytest.approx(4.0, abs=1e-14)

    def test_even_index_at_pi(self):
        for k in range(1, 20):
            assert eval_A(2 * k, PI) == pytest.approx(4 * k, rel=1e-14)

    def test_zeros_at_multiples_of_2pi(self):
        for n in range(2, 30):
            for ell in (-2, 0, 1, 3):
                assert abs(eval_A(n, 2 * PI * ell)) <= 1e-12

    def test_zero_at_pi_iff_odd(self):
        for n in range(2, 101):
            if n % 2:
                assert eval_A(n, PI) <= 1e-12
            else:
                assert eval_A(n, PI) > 1.0

    def test_strictly_positive_inside(self):
        t = np.linspace(1e-2, PI - 1e-2, 2000)
        for n in range(2, 101):
            assert np.all(eval_A(n, t) > 1e-12)

    def test_matches_definition_away_from_zeros(self):
        t = np.linspace(0.05, 6.2, 400)
        t = t[np.abs(np.sin(t)) > 1e-2]
        for n in (2, 3, 8, 17):
            np.testing.assert_allclose(eval_A(n, t), [direct_A(n, x) for x in t], atol=1e-11)

    def test_small_t_expansion(self):
        # A_n(t) ~ (n^3 - n) t^2 / 6 with full relative accuracy
        t = 1e-7
        for n in (2, 5, 40):
            assert eval_A(n, t) == pytest.approx((n**3 - n) * t * t / 6, rel=1e-9)

    def test_nonnegative_random(self):
        rng = np.random.default_rng(7)
        t = rng.uniform(0, 2 * PI, 10_000)
        for n in range(2, 101):
            assert np.all(eval_A(n, t) >= 0)

    @given(st.integers(2, 100), st.floats(0, 2 * PI))
    def test_symmetry(self, n, t):
        assert eval_A(n, 2 * PI - t) == pytest.approx(eval_A(n, t), abs=1e-12)

    @given(st.integers(2, 40), st.floats(0.01, PI - 0.01))
    def test_lemma3_chain(self, n, t):
        chain = [normalized_A(k, t) for k in range(n, n + 12, 2)]
        assert all(a >= b - 1e-15 for a, b in zip(chain, chain[1:]))


class TestEndpointLimits:
    def test_examples(self):
        assert endpoint_limits(3, 2) == (Fraction(1, 4), math.inf)
        assert endpoint_limits(4, 3) == (Fraction(2, 5), 0)
        assert endpoint_limits(5, 3) == (Fraction(1, 5), Fraction(1, 5))
        assert endpoint_limits(6, 4) == (Fraction(60, 210), Fraction(2, 3))

    @pytest.mark.parametrize("m,n", [(3, 2), (4, 3), (5, 3), (6, 4), (9, 4), (8, 5)])
    def test_limits_match_near_endpoint_values(self, m, n):
        lim0, lim_pi = endpoint_limits(m, n)
        prof = RatioProfile(m, n)
        assert prof(1e-5) == pytest.approx(float(lim0), rel=1e-8)
        near_pi = prof(PI - 1e-5)
        if lim_pi == math.inf:
            assert near_pi > 1e8
        else:
            assert near_pi == pytest.approx(float(lim_pi), abs=1e-8)

    def test_rejects_bad_pairs(self):
        for m, n in [(2, 2), (3, 3), (3, 1), (2, 3)]:
            with pytest.raises(RangeError):
                endpoint_limits(m, n)


class TestEvalPhi:
    def test_examples(self):
        assert eval_phi(RatioProfile(3, 2), PI / 2) == pytest.approx(0.5, abs=1e-15)
        assert eval_phi(RatioProfile(4, 2), PI / 2) == pytest.approx(0.5, abs=1e-15)
        # mpmath value of A_3/A_5 at t = 1e-4
        assert eval_phi(RatioProfile(5, 3), 1e-4) == pytest.approx(0.20000000160000000747, rel=1e-12)

    @pytest.mark.parametrize("t", [0.0, PI, -0.1, 4.0])
    def test_endpoints_rejected(self, t):
        with pytest.raises(DomainError):
            eval_phi(RatioProfile(3, 2), t)


class TestGoldenRefine:
    def test_quadratics(self):
        f = lambda x: (x - 0.3) ** 2 + (x - 0.3) ** 4
        x, fx = golden_refine(f, [0.0, 0.25], [1.0, 0.35], 1e-12)
        np.testing.assert_allclose(x, [0.3, 0.3], atol=1e-7)
        assert np.all(fx < 1e-13)


class TestMinimizeB:
    def test_b32(self):
        r = minimize_B(3, 2)
        assert r.value == pytest.approx(0.25, abs=1e-9)
        assert r.endpoint == "0"

    def test_b43_is_zero_at_pi(self):
        r = minimize_B(4, 3)
        assert r.value == 0.0
        assert r.endpoint == "pi" and r.argmin == PI

    @pytest.mark.parametrize("m,n", [(5, 3), (4, 2), (7, 4)])
    def test_theorem_cases(self, m, n):
        assert minimize_B(m, n).value == pytest.approx((n**3 - n) / (m**3 - m), rel=1e-8)

    def test_interior_minimum_below_endpoint(self):
        # (7, 6) lies on the conjectured boundary line: equality fails there
        r = minimize_B(7, 6)
        assert r.endpoint is None
        assert r.value < 5 / 8 - 1e-3
        # brute-force oracle: dense sampling never beats the refined minimum
        t = np.linspace(1e-3, PI - 1e-3, 400_001)
        assert r.value <= np.min(RatioProfile(7, 6)(t)) + 1e-12

    def test_grid_size_and_determinism(self):
        r1 = minimize_B(40, 21, MinimizeConfig(grid_mult=64))
        r2 = minimize_B(40, 21, MinimizeConfig(grid_mult=64))
        assert r1 == r2
        assert r1.grid_points == 64 * 40
        assert minimize_B(3, 2).grid_points == 1024

    def test_odd_odd_tie_breaks_to_zero(self):
        r = minimize_B(9, 3)
        assert r.endpoint == "0"
        assert r.margin > 0

    @pytest.mark.parametrize("cfg", [dict(grid_mult=4), dict(refine_tol=0.0), dict(refine_tol=-1.0)])
    def test_config_errors(self, cfg):
        with pytest.raises(ConfigError):
            MinimizeConfig(**cfg)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(3, 30).flatmap(lambda m: st.tuples(st.just(m), st.integers(2, m - 1))))
    def test_value_bounded_by_limit0(self, mn):
        m, n = mn
        r = minimize_B(m, n)
        assert 0 <= r.value <= (n**3 - n) / (m**3 - m) + r.refine_tol


class TestPhi:
    def test_examples(self):
        assert eval_Phi(3, 0.0) == 0.0
        assert eval_Phi(3, PI / 2) == pytest.approx(16.0, abs=1e-12)

    def test_value_at_half_pi_bound(self):
        for N in range(3, 60):
            assert eval_Phi(N, PI / 2) >= N * N - 4 - 1e-9

    def test_critical_points_from_sin_half(self):
        for N in range(3, 25):
            for k in range(1, (N + 1) // 2):
                tk = 2 * k * PI / N
                assert eval_Phi(N, tk) == pytest.approx(3 * N * N * math.sin(tk), rel=1e-10, abs=1e-10)

    def test_equivalent_to_lemma_inequality(self):
        # Phi(t) = (1/2) sin t * [N(N+1)(N+2) A_{N-1} - N(N-1)(N-2) A_{N+1}] / N
        t = np.linspace(0.1, 3.0, 50)
        for N in (3, 4, 9):
            lhs = eval_Phi(N, t)
            rhs = 0.5 * np.sin(t) * ((N + 1) * (N + 2) * eval_A(N - 1, t) - (N - 1) * (N - 2) * eval_A(N + 1, t))
            np.testing.assert_allclose(lhs, rhs, atol=1e-11)

    def test_rejects_small_N(self):
        with pytest.raises(DomainError):
            eval_Phi(2, 1.0)


class TestLemma3:
    def test_n2_half_pi(self):
        assert normalized_A(2, PI / 2) == pytest.approx(1 / 3)
        assert normalized_A(4, PI / 2) == pytest.approx(1 / 15)
        rep = check_lemma3(2, 1001)  # grid contains pi/2 (index 501)
        assert rep.passed

    def test_boundary_equality_at_pi_for_odd(self):
        t = PI - 1e-7
        assert normalized_A(3, t) < 1e-14 and normalized_A(5, t) < 1e-14

    def test_grid_sweep_small(self):
        for n in range(2, 12):
            rep = check_lemma3(n, 5000)
            assert rep.passed and rep.ratio_margin > 0

    def test_grid_too_small(self):
        with pytest.raises(ConfigError):
            check_lemma3(3, 999)
