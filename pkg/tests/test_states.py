"""Tests for quantum-number bookkeeping, wavefunctions and coordinates."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import sph_harm_y

from dyonstark.quadrature import gauss_laguerre, gauss_legendre, integrate_halfline
from dyonstark.specfun import HalfInteger, half
from dyonstark.states import (
    ParabolicPoint,
    ParabolicState,
    PhysicalParams,
    SphericalState,
    beta_eigenvalue,
    cartesian_to_parabolic,
    energy_level,
    enumerate_shell_parabolic,
    enumerate_shell_spherical,
    normalization_diagnostics,
    parabolic_hamiltonian_residual,
    parabolic_overlap,
    parabolic_psi,
    parabolic_to_cartesian,
    phi_pair_moment,
    phi_pq,
    radial_R,
    spherical_overlap,
    spherical_psi,
    volume_element,
)

P0 = PhysicalParams.atomic(0)
PHALF = PhysicalParams.atomic(half("1/2"))
P1 = PhysicalParams.atomic(1)


class TestPhysicalParams:
    def test_bohr_radius_is_derived(self):
        p = PhysicalParams(hbar=2.0, mu=0.5, gamma_c=4.0, e_abs=1.0, s=half(0))
        assert p.a == pytest.approx(2.0**2 / (0.5 * 4.0))

    def test_positivity_enforced(self):
        with pytest.raises(ValueError):
            PhysicalParams(hbar=0.0)
        with pytest.raises(ValueError):
            PhysicalParams(gamma_c=-1.0)

    def test_dirac_quantization_via_halfinteger(self):
        with pytest.raises(ValueError):
            PhysicalParams.atomic(s=0.3)


class TestEnergy:
    def test_ground_level(self):
        assert energy_level(1, P0) == pytest.approx(-0.5, rel=1e-15)

    def test_second_level(self):
        assert energy_level(2, P0) == pytest.approx(-0.125, rel=1e-15)

    def test_half_integer_ground_shell(self):
        assert energy_level(half("3/2"), PHALF) == pytest.approx(-2.0 / 9.0, rel=1e-14)

    def test_strictly_negative_and_increasing(self):
        prev = -math.inf
        for k in range(8):
            e = energy_level(half("3/2") + k, PHALF)
            assert e < 0
            assert e > prev
            prev = e

    def test_below_ground_shell_rejected(self):
        with pytest.raises(ValueError, match="n must satisfy"):
            energy_level(1, P1)
        with pytest.raises(ValueError, match="n must satisfy"):
            energy_level(2, PHALF)  # n - |s| - 1 not an integer


class TestEnumeration:
    def test_hydrogen_ground(self):
        assert len(enumerate_shell_spherical(1, 0)) == 1
        assert [(st.n1, st.n2, st.m.twice) for st in enumerate_shell_parabolic(1, 0)] == [
            (0, 0, 0)
        ]

    def test_s1_n2_shell(self):
        shell = enumerate_shell_spherical(2, 1)
        assert [(st.j.twice, st.m.twice) for st in shell] == [(2, -2), (2, 0), (2, 2)]
        par = enumerate_shell_parabolic(2, 1)
        assert [(st.n1, st.n2, st.m.twice) for st in par] == [
            (0, 0, -2),
            (0, 0, 0),
            (0, 0, 2),
        ]

    def test_half_integer_shell_count(self):
        assert len(enumerate_shell_spherical(half("5/2"), half("1/2"))) == 6
        assert len(enumerate_shell_parabolic(half("5/2"), half("1/2"))) == 6

    def test_hydrogen_n2_parabolic(self):
        labels = [(st.n1, st.n2, st.m.twice) for st in enumerate_shell_parabolic(2, 0)]
        assert labels == [(0, 0, -2), (0, 0, 2), (0, 1, 0), (1, 0, 0)]

    @given(st.integers(-6, 6), st.integers(0, 7))
    @settings(max_examples=60, deadline=None)
    def test_cardinality_matches(self, s_twice, k):
        s = HalfInteger(s_twice)
        n = abs(s) + 1 + k
        expected = (n.twice**2 - s.twice**2) // 4
        assert len(enumerate_shell_spherical(n, s)) == expected
        assert len(enumerate_shell_parabolic(n, s)) == expected

    def test_label_invariants_enforced(self):
        with pytest.raises(ValueError, match="j must satisfy"):
            SphericalState(n=half(2), j=half(2), m=half(0), s=half(0))
        with pytest.raises(ValueError, match="m must satisfy"):
            SphericalState(n=half(2), j=half(1), m=half("1/2"), s=half(0))
        with pytest.raises(ValueError, match="m - s"):
            ParabolicState(0, 0, half("1/2"), half(0))
        with pytest.raises(ValueError, match="n1"):
            ParabolicState(-1, 0, half(0), half(0))


class TestBetaEigenvalue:
    def test_symmetric_state_vanishes(self):
        assert beta_eigenvalue(ParabolicState(1, 1, 0, 0), P0) == 0.0

    def test_hydrogen_n2(self):
        assert beta_eigenvalue(ParabolicState(1, 0, 0, 0), P0) == pytest.approx(0.5, rel=1e-14)

    def test_mirror_antisymmetry(self):
        for s_raw, params in ((0, P0), (1, P1), (half("1/2"), PHALF)):
            s = half(s_raw)
            n = abs(s) + 3
            for state in enumerate_shell_parabolic(n, s):
                mirror = ParabolicState(state.n2, state.n1, -state.m, state.s)
                assert beta_eigenvalue(mirror, params) == pytest.approx(
                    -beta_eigenvalue(state, params), abs=1e-15
                )


class TestRadial:
    def test_hydrogen_1s_constant(self):
        # R_10 = 2 a^{-3/2} e^{-r/a}, checked at a != 1 as well
        for params in (P0, PhysicalParams.atomic(0, gamma_c=0.5)):
            a = params.a
            r = np.linspace(0.0, 6.0 * a, 13)
            want = 2.0 * a**-1.5 * np.exp(-r / a)
            assert np.allclose(radial_R(1, 0, r, params), want, rtol=1e-13)

    def test_vanishes_at_origin_for_positive_j(self):
        assert radial_R(2, 1, 0.0, P0) == 0.0
        assert radial_R(half("5/2"), half("3/2"), 0.0, PHALF) == 0.0

    def test_node_of_2s_at_two_bohr(self):
        params = PhysicalParams.atomic(0, gamma_c=2.0)  # a = 0.5
        a = params.a
        assert radial_R(2, 0, 2.0 * a, params) == pytest.approx(0.0, abs=1e-14)
        assert radial_R(2, 0, 1.9 * a, params) != pytest.approx(0.0, abs=1e-6)

    @pytest.mark.parametrize(
        "n_raw,j_raw,params",
        [
            (1, 0, P0),
            (2, 1, P0),
            (4, 2, P0),
            ("3/2", "1/2", PHALF),
            ("7/2", "3/2", PHALF),
            (3, 1, P1),
        ],
    )
    def test_unit_norm(self, n_raw, j_raw, params):
        n, j = half(n_raw), half(j_raw)
        rule = gauss_laguerre(64)

        def f(r):
            return radial_R(n, j, r, params) ** 2 * r**2

        got = integrate_halfline(f, rule, scale=params.a * n.value / 2.0)
        assert got == pytest.approx(1.0, rel=1e-11)

    def test_rejects_bad_levels(self):
        with pytest.raises(ValueError):
            radial_R(2, 2, 1.0, P0)
        with pytest.raises(ValueError):
            radial_R(2, half("1/2"), 1.0, P0)


class TestPhiFactor:
    def test_unit_at_origin_for_q0(self):
        assert phi_pq(0, 0, 0.0, 1, P0) == 1.0

    def test_vanishes_at_origin_for_q_nonzero(self):
        assert phi_pq(1, 1, 0.0, 3, P0) == 0.0
        assert phi_pq(0, -2, 0.0, 2, P0) == 0.0

    def test_norm_integral_is_a_times_n(self):
        # closed form: integral Phi_pq^2 dx = a n, spot-checked at n = 3
        got = phi_pair_moment(1, 1, 1, 0, 3.0, 3.0, P0, order=40)
        assert got == pytest.approx(3.0 * P0.a, rel=1e-12)

    def test_orthogonality_in_p(self):
        got = phi_pair_moment(0, 2, 1, 0, 3.0, 3.0, P0, order=40)
        assert got == pytest.approx(0.0, abs=1e-13)


def _textbook_hydrogen_radial(n, l, r):
    if (n, l) == (1, 0):
        return 2.0 * np.exp(-r)
    if (n, l) == (2, 0):
        return (1.0 / math.sqrt(2.0)) * (1.0 - r / 2.0) * np.exp(-r / 2.0)
    if (n, l) == (2, 1):
        return (1.0 / math.sqrt(24.0)) * r * np.exp(-r / 2.0)
    if (n, l) == (3, 0):
        return (2.0 / math.sqrt(27.0)) * (1.0 - 2.0 * r / 3.0 + 2.0 * r**2 / 27.0) * np.exp(-r / 3.0)
    if (n, l) == (3, 1):
        return (8.0 / (27.0 * math.sqrt(6.0))) * r * (1.0 - r / 6.0) * np.exp(-r / 3.0)
    if (n, l) == (3, 2):
        return (4.0 / (81.0 * math.sqrt(30.0))) * r**2 * np.exp(-r / 3.0)
    raise KeyError((n, l))


class TestSphericalPsi:
    def test_phase_only_phi_dependence(self):
        state = SphericalState(n=half(3), j=half(2), m=half(1), s=half(0))
        r, th = 1.3, 0.8
        vals = [abs(spherical_psi(state, r, th, phi, P0)) for phi in (0.0, 1.1, 4.0)]
        assert max(vals) - min(vals) <= 1e-15

    def test_ground_state_real_and_isotropic(self):
        state = SphericalState(n=half(1), j=half(0), m=half(0), s=half(0))
        vals = [spherical_psi(state, 1.0, th, ph, P0) for th in (0.1, 1.2) for ph in (0.0, 2.2)]
        assert all(abs(v.imag) < 1e-16 for v in vals)
        assert max(abs(v - vals[0]) for v in vals) <= 1e-15

    def test_unit_norm_monopole_state(self):
        state = SphericalState(n=half(2), j=half(1), m=half(0), s=half(1))
        assert spherical_overlap(state, state, P1) == pytest.approx(1.0, abs=1e-10)

    def test_hydrogen_reduction_pointwise(self):
        # at s = 0 the wavefunctions are textbook hydrogen: R_nl * Y_lm
        r = np.array([0.4, 1.0, 2.5, 6.0])
        th = np.array([0.3, 1.1, 2.0, 2.8])
        ph = np.array([0.0, 0.9, 3.3, 5.1])
        for n in (1, 2, 3):
            for l in range(n):
                for m in range(-l, l + 1):
                    state = SphericalState(n=half(n), j=half(l), m=half(m), s=half(0))
                    got = spherical_psi(state, r, th, ph, P0)
                    want = _textbook_hydrogen_radial(n, l, r) * sph_harm_y(l, m, th, ph)
                    assert np.allclose(got, want, rtol=1e-10, atol=1e-13)

    def test_orthonormality_sample(self):
        shell2 = enumerate_shell_spherical(2, 0)
        shell3 = enumerate_shell_spherical(3, 0)
        for a in shell2 + shell3:
            for b in shell2 + shell3:
                if a.m != b.m:
                    continue
                want = 1.0 if a == b else 0.0
                assert spherical_overlap(a, b, P0) == pytest.approx(want, abs=1e-10)

    def test_gauge_string_value_finite(self):
        state = SphericalState(n=half(2), j=half(1), m=half(0), s=half(1))
        val = spherical_psi(state, 1.0, math.pi, 0.0, P1)
        assert np.isfinite(val.real) and np.isfinite(val.imag)

    def test_angular_renormalization_recorded(self):
        spherical_psi(SphericalState(half(1), half(0), half(0), half(0)), 1.0, 0.3, 0.0, P0)
        entries = [d for d in normalization_diagnostics() if d["label"].startswith("spherical")]
        assert entries
        for d in entries:
            assert d["renormalization_factor"] == pytest.approx(math.sqrt(2 * math.pi), rel=1e-10)


class TestParabolicPsi:
    def test_hydrogen_ground_unit_norm(self):
        state = ParabolicState(0, 0, 0, 0)
        assert parabolic_overlap(state, state, P0) == pytest.approx(1.0, abs=1e-10)

    def test_m_sectors_orthogonal(self):
        a = ParabolicState(0, 0, 1, 0)
        b = ParabolicState(0, 1, 0, 0)
        assert parabolic_overlap(a, b, P0) == 0.0

    def test_same_sector_orthogonality(self):
        a = ParabolicState(1, 0, 0, 0)
        b = ParabolicState(0, 1, 0, 0)
        assert parabolic_overlap(a, b, P0) == pytest.approx(0.0, abs=1e-10)
        c = ParabolicState(2, 0, 0, 0)  # different shell, same m
        assert parabolic_overlap(a, c, P0) == pytest.approx(0.0, abs=1e-10)

    def test_orthonormality_per_sector(self):
        states = []
        for n in (half("3/2"), half("5/2"), half("7/2")):
            states.extend(enumerate_shell_parabolic(n, half("1/2")))
        for a in states:
            for b in states:
                if a.m != b.m:
                    continue
                want = 1.0 if a == b else 0.0
                assert parabolic_overlap(a, b, PHALF) == pytest.approx(want, abs=1e-9)

    def test_ground_state_closed_form(self):
        # n = |s|+1 parabolic states match const r^{|s|} e^{-r/(a n)}
        # (cos th/2)^{|s|+-m'} (+-sin th/2)^{|s|-+m'} pointwise at fixed phi.
        # The azimuthal labels of the two printed bases are gauge-string
        # mirrored: the parabolic state m sits at m' = -m of the ground
        # multiplet (its eta-axis exponent is |m+s|, not |m-s|).
        for s_raw in (half("1/2"), half(1), half("-1/2"), half(2)):
            s = half(s_raw)
            params = PhysicalParams.atomic(s)
            n0 = abs(s) + 1
            for state in enumerate_shell_parabolic(n0, s):
                mp = -state.m
                xi = np.linspace(0.4, 5.0, 7)
                eta = np.linspace(0.3, 4.0, 7)
                ratios = []
                for x in xi:
                    for e in eta:
                        pt = ParabolicPoint(x, e, 0.9)
                        r = (x + e) / 2.0
                        cos_half = math.sqrt(x / (2.0 * r))
                        sin_half = math.sqrt(e / (2.0 * r))
                        if s.twice > 0:
                            ref = (
                                cos_half ** float((abs(s) + mp).value)
                                * sin_half ** float((abs(s) - mp).value)
                            )
                        else:
                            ref = (
                                cos_half ** float((abs(s) - mp).value)
                                * (-sin_half) ** float((abs(s) + mp).value)
                            )
                        ref *= r ** abs(s).value * math.exp(-r / (params.a * n0.value))
                        ratios.append(parabolic_psi(state, pt, params) / ref)
                ratios = np.array(ratios)
                assert np.max(np.abs(ratios / ratios[0] - 1.0)) <= 1e-10

    def test_schroedinger_residual(self):
        cases = [
            (ParabolicState(1, 0, 0, 0), P0),
            (ParabolicState(0, 2, 0, 0), P0),
            (ParabolicState(0, 0, half("3/2"), half("1/2")), PHALF),
            (ParabolicState(1, 0, half("-1/2"), half("1/2")), PHALF),
            (ParabolicState(0, 0, -1, 1), P1),
            (ParabolicState(1, 1, 0, 1), P1),
        ]
        for state, params in cases:
            assert parabolic_hamiltonian_residual(state, params) <= 1e-6

    def test_state_params_mismatch_raises(self):
        with pytest.raises(ValueError, match="must agree"):
            parabolic_psi(ParabolicState(0, 0, 0, 0), ParabolicPoint(1.0, 1.0), P1)


class TestCoordinates:
    def test_equal_xi_eta_is_equator(self):
        assert parabolic_to_cartesian(ParabolicPoint(1.7, 1.7, 0.4))[2] == 0.0

    def test_axis_point(self):
        assert parabolic_to_cartesian(ParabolicPoint(2.0, 0.0, 2.2)) == pytest.approx(
            (0.0, 0.0, 1.0)
        )

    @given(
        st.floats(-5, 5),
        st.floats(-5, 5),
        st.floats(-5, 5),
    )
    @settings(max_examples=300, deadline=None)
    def test_round_trip(self, x1, x2, x3):
        back = parabolic_to_cartesian(cartesian_to_parabolic(x1, x2, x3))
        scale = max(1e-30, abs(x1), abs(x2), abs(x3))
        assert max(abs(a - b) for a, b in zip(back, (x1, x2, x3))) <= 1e-12 * scale

    def test_volume_element_values(self):
        assert volume_element(0.0, 0.0) == 0.0
        assert volume_element(1.0, 1.0) == 0.5

    def test_volume_element_against_monte_carlo(self):
        # image of {xi, eta <= L} is {r + |x3| <= L}; dV integral = pi L^3 / 2
        leg = gauss_legendre(8)
        t = 0.5 * (leg.nodes + 1.0)  # map to [0, 1]
        w = 0.5 * leg.weights
        quad_vol = 2.0 * math.pi * float(
            np.sum(w[:, None] * w[None, :] * volume_element(t[:, None], t[None, :]))
        )
        rng = np.random.default_rng(99)
        pts = rng.uniform(-1.0, 1.0, size=(200_000, 3))
        r = np.linalg.norm(pts, axis=1)
        inside = r + np.abs(pts[:, 2]) <= 1.0
        mc_vol = 8.0 * float(np.mean(inside))
        sigma = 8.0 * math.sqrt(float(np.mean(inside)) * (1 - float(np.mean(inside))) / len(pts))
        assert quad_vol == pytest.approx(math.pi / 2.0, rel=1e-12)
        assert abs(mc_vol - quad_vol) <= 4.0 * sigma

    def test_negative_coordinates_rejected(self):
        with pytest.raises(ValueError):
            ParabolicPoint(-0.1, 1.0, 0.0)
