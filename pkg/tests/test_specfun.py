"""Tests for exact special functions: half-integers, factorials,
terminating hypergeometrics and Wigner d-functions."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyonstark.quadrature import gauss_legendre
from dyonstark.specfun import (
    HalfInteger,
    half,
    hyp1f1_poly,
    hyp2f1_unit,
    ln_gamma,
    wigner_d,
)


class TestHalfInteger:
    def test_coercion(self):
        assert half(3).twice == 6
        assert half(0.5).twice == 1
        assert half("-3/2").twice == -3
        assert half("2").twice == 4
        assert half(half(1)) == HalfInteger(2)

    def test_rejects_non_half(self):
        with pytest.raises(ValueError):
            half(0.3)
        with pytest.raises(TypeError):
            half(object())

    def test_str(self):
        assert str(half(2)) == "2"
        assert str(half(-1.5)) == "-3/2"

    @given(st.integers(-200, 200), st.integers(-200, 200))
    def test_arithmetic_closed_and_exact(self, a, b):
        x, y = HalfInteger(a), HalfInteger(b)
        assert (x + y).twice == a + b
        assert (x - y).twice == a - b
        assert (-x).twice == -a
        assert abs(x).twice == abs(a)
        assert float(x + y) == (a + b) / 2

    def test_ordering(self):
        assert half(0.5) < half(1) <= half(1)
        assert max(half(-2), half(1.5)) == half(1.5)

    def test_as_int(self):
        assert half(4).as_int() == 4
        with pytest.raises(ValueError):
            half(0.5).as_int()


class TestLnGamma:
    def test_factorial_points(self):
        assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
        assert ln_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-13)
        assert ln_gamma(6.0) == pytest.approx(math.log(120.0), rel=1e-13)

    def test_range_against_running_product(self):
        # Gamma(x+k) = (x)_k Gamma(x), accumulated in exact-ish steps
        for x0 in (0.5, 1.25, 2.0):
            acc = ln_gamma(x0)
            for k in range(1, 290):
                acc += math.log(x0 + k - 1)
                assert ln_gamma(x0 + k) == pytest.approx(acc, rel=1e-12)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            ln_gamma(0.0)
        with pytest.raises(ValueError):
            ln_gamma(-3.2)


def _hyp1f1_exact(p: int, b: Fraction, x: Fraction) -> Fraction:
    term = Fraction(1)
    total = Fraction(1)
    for k in range(p):
        term = term * (k - p) * x / ((b + k) * (k + 1))
        total += term
    return total


class TestHyp1F1:
    def test_examples(self):
        assert hyp1f1_poly(0, 2, 5.3) == 1.0
        assert hyp1f1_poly(1, 2, 1.0) == pytest.approx(0.5, rel=1e-15)
        # finite-sum oracle: 1 - 2x + x^2/2 at x = 1
        assert hyp1f1_poly(2, 1, 1.0) == pytest.approx(-0.5, rel=1e-14)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            hyp1f1_poly(-1, 2, 1.0)
        with pytest.raises(ValueError):
            hyp1f1_poly(2, 0.0, 1.0)

    @given(
        st.integers(0, 20),
        st.integers(1, 10),
        st.fractions(min_value=0, max_value=50).map(lambda f: f.limit_denominator(64)),
    )
    @settings(max_examples=150, deadline=None)
    def test_matches_exact_rational_series(self, p, b, x):
        exact = _hyp1f1_exact(p, Fraction(b), x)
        got = hyp1f1_poly(p, float(b), float(x))
        scale = max(abs(float(exact)), 1.0)
        assert abs(got - float(exact)) <= 5e-12 * scale

    def test_contiguous_relation_full_grid(self):
        # b F(-p;b;x) - b F(-(p-1);b;x) + x F(-(p-1);b+1;x) = 0
        worst = 0.0
        for p in range(1, 21):
            for b in range(1, 11):
                for x in np.linspace(0.0, 50.0, 11):
                    t1 = b * hyp1f1_poly(p, b, x)
                    t2 = b * hyp1f1_poly(p - 1, b, x)
                    t3 = x * hyp1f1_poly(p - 1, b + 1, x)
                    scale = max(abs(t1), abs(t2), abs(t3), 1.0)
                    worst = max(worst, abs(t1 - t2 + t3) / scale)
        assert worst <= 1e-10

    def test_vectorized(self):
        x = np.linspace(0, 4, 7)
        vals = hyp1f1_poly(1, 2.0, x)
        assert np.allclose(vals, 1 - x / 2, rtol=1e-14)


class TestHyp2F1Unit:
    def test_examples(self):
        assert hyp2f1_unit(0.0, 4.2, 9.9) == 1.0
        assert hyp2f1_unit(-1, 1, 2) == pytest.approx(0.5, rel=1e-14)
        # brute-force series: 1 - 6/5 + 24/60 = 0.2 (Chu-Vandermonde concurs)
        assert hyp2f1_unit(-2, 3, 5) == pytest.approx(0.2, rel=1e-13)

    @given(st.integers(0, 12), st.integers(1, 8), st.integers(1, 8))
    @settings(max_examples=120, deadline=None)
    def test_chu_vandermonde(self, p, beta, extra):
        # 2F1(-p, b; c; 1) = (c - b)_p / (c)_p with c = b + extra + p
        c = beta + extra + p
        got = hyp2f1_unit(-p, beta, c)
        want = Fraction(1)
        for k in range(p):
            want *= Fraction(c - beta + k, c + k)
        assert got == pytest.approx(float(want), rel=1e-12)

    def test_gamma_route_matches_terminating_route(self):
        for p in (1, 2, 5):
            for beta in (0.5, 2.25):
                for c in (7.0, 11.5):
                    series = hyp2f1_unit(-p, beta, c)
                    # alpha = -p is not a pole of the Gamma ratio here,
                    # so the two evaluation routes must agree
                    lg = math.lgamma
                    gamma_route = math.exp(
                        lg(c) + lg(c + p - beta) - lg(c + p) - lg(c - beta)
                    )
                    assert series == pytest.approx(gamma_route, rel=1e-12)

    def test_divergent_raises(self):
        with pytest.raises(ValueError):
            hyp2f1_unit(1.0, 2.0, 2.5)  # c - a - b < 0, non-terminating


class TestWignerD:
    def test_scalar_representation(self):
        for th in np.linspace(0, math.pi, 9):
            assert wigner_d(0, 0, 0, th) == 1.0

    def test_spin_half(self):
        for th in np.linspace(0, math.pi, 9):
            assert wigner_d(0.5, 0.5, 0.5, th) == pytest.approx(math.cos(th / 2), abs=1e-15)
            assert wigner_d(0.5, 0.5, -0.5, th) == pytest.approx(-math.sin(th / 2), abs=1e-15)

    def test_j1_is_legendre(self):
        for th in np.linspace(0, math.pi, 9):
            assert wigner_d(1, 0, 0, th) == pytest.approx(math.cos(th), abs=1e-14)

    def test_identity_at_zero(self):
        for j2 in range(0, 10):
            for m2 in range(-j2, j2 + 1, 2):
                for s2 in range(-j2, j2 + 1, 2):
                    val = wigner_d(HalfInteger(j2), HalfInteger(m2), HalfInteger(s2), 0.0)
                    assert val == pytest.approx(1.0 if m2 == s2 else 0.0, abs=1e-14)

    def test_index_swap_symmetry(self):
        thetas = np.linspace(0.0, math.pi, 11)
        for j2 in range(1, 10):
            for m2 in range(-j2, j2 + 1, 2):
                for s2 in range(-j2, j2 + 1, 2):
                    j, m, s = HalfInteger(j2), HalfInteger(m2), HalfInteger(s2)
                    phase = (-1.0) ** ((m2 - s2) // 2)
                    assert np.allclose(
                        wigner_d(j, m, s, thetas),
                        phase * wigner_d(j, s, m, thetas),
                        atol=5e-14,
                    )

    def test_orthogonality(self):
        rule = gauss_legendre(40)
        for parity in (0, 1):
            js = [HalfInteger(t) for t in range(parity, 10, 2)]
            for ja in js:
                for jb in js:
                    jmin = min(ja.twice, jb.twice)
                    for m2 in range(-jmin, jmin + 1, 2):
                        for s2 in range(-jmin, jmin + 1, 2):
                            m, s = HalfInteger(m2), HalfInteger(s2)

                            def f(t):
                                th = np.arccos(t)
                                return wigner_d(ja, m, s, th) * wigner_d(jb, m, s, th)

                            got = rule.integrate(f)
                            want = 2.0 / (ja.twice + 1.0) if ja == jb else 0.0
                            assert abs(got - want) <= 1e-10

    def test_ground_state_angular_shape(self):
        # j = |s|: single-term sum, proportional to
        # (cos th/2)^(j+m) (sin th/2)^(j-m) with positive constant
        thetas = np.linspace(0.1, math.pi - 0.1, 25)
        for s2 in (1, 2, 3, 4):
            j = HalfInteger(s2)
            for m2 in range(-s2, s2 + 1, 2):
                m = HalfInteger(m2)
                vals = wigner_d(j, m, j, thetas)
                ref = np.cos(thetas / 2) ** ((s2 + m2) / 2) * np.sin(thetas / 2) ** (
                    (s2 - m2) / 2
                )
                ratio = vals / ref
                assert np.max(np.abs(ratio / ratio[0] - 1.0)) <= 1e-10
                assert ratio[0] > 0

    def test_index_validation(self):
        with pytest.raises(ValueError):
            wigner_d(1, 2, 0, 0.3)
        with pytest.raises(ValueError):
            wigner_d(1, 0.5, 0, 0.3)
        with pytest.raises(ValueError):
            wigner_d(-1, 0, 0, 0.3)
