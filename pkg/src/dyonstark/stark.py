"""Closed-form first-order Stark theory for the charge-dyon system.

A uniform electric field epsilon along +x3 adds |e| epsilon z to the
Hamiltonian.  In the parabolic basis the perturbation is diagonal
within every degenerate shell, so first-order shifts come out in
closed form:

    E1 = (3 hbar^2 |e| eps / 2 mu gamma) [ n (n1 - n2 + (|m-s|-|m+s|)/2)
                                           + m s / 3 ]

The bracket is an exact integer multiple of 1/12 once doubled quantum
numbers are used, so ties, injectivity and extreme components are all
decided in integer arithmetic, never by float comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .specfun import half
from .states import (
    ParabolicState,
    PhysicalParams,
    _check_shell,
    _check_state_params,
    beta_eigenvalue,
    energy_level,
    enumerate_shell_parabolic,
)

__all__ = [
    "FieldConfig",
    "StarkShiftRecord",
    "shift_unit",
    "shift_quantum",
    "bracket_twelfths",
    "integral_I",
    "integral_II",
    "shift_integral_form",
    "shift_closed_form",
    "shell_splitting",
    "mean_dipole",
    "dipole_operator_expectation",
    "stark_table",
]


@dataclass(frozen=True)
class FieldConfig:
    """Uniform electric field of strength epsilon along +x3."""

    epsilon: float = 0.0

    def __post_init__(self):
        if not (self.epsilon >= 0 and math.isfinite(self.epsilon)):
            raise ValueError(f"epsilon must be a finite non-negative number, got {self.epsilon}")

    def perturbative_ratio(self, n, params: PhysicalParams) -> float:
        """|e| eps a^2 n^4 / gamma: first-order shift over level spacing.

        Reported as a diagnostic only; first-order theory is credible
        while this stays well below one.  No hard cap is enforced.
        """
        nf = float(half(n).value)
        return params.e_abs * self.epsilon * params.a**2 * nf**4 / params.gamma_c


@dataclass(frozen=True)
class StarkShiftRecord:
    """One shell state with its energy, first-order shift and dipole."""

    state: ParabolicState
    e0: float
    e1: float
    dipole_z: float


def shift_unit(params: PhysicalParams) -> float:
    """3 hbar^2 |e| / (2 mu gamma): the shift scale per unit field."""
    return 3.0 * params.hbar**2 * params.e_abs / (2.0 * params.mu * params.gamma_c)


def shift_quantum(field: FieldConfig, params: PhysicalParams) -> float:
    """3 hbar^2 |e| eps / (2 mu gamma): the scale of every shift."""
    return shift_unit(params) * field.epsilon


def bracket_twelfths(state: ParabolicState) -> int:
    """12 [n (n1 - n2 + (|m-s|-|m+s|)/2) + m s / 3] as an exact integer.

    With doubled quantum numbers: 3 (2n)(2X) + (2m)(2s), where
    X = n1 - n2 + (|m-s| - |m+s|)/2.  Shifts are this integer times
    shift_quantum/12, which is what makes exact tie detection possible.
    """
    x2 = 2 * (state.n1 - state.n2) + abs(state.q1) - abs(state.q2)
    return 3 * state.n.twice * x2 + state.m.twice * state.s.twice


def integral_I(p: int, q: int, n, params: PhysicalParams) -> float:
    """Closed form of integral Phi_pq^2 dx: a*n for every p, q."""
    if p < 0 or p != int(p):
        raise ValueError(f"p must be a non-negative integer, got {p}")
    return params.a * float(n)


def integral_II(p: int, q: int, n, params: PhysicalParams) -> float:
    """Closed form of integral x^2 Phi_pq^2 dx.

    2 (a n)^3 [3 p (p + |q| + 1) + (|q|/2)(|q| + 3) + 1].
    """
    if p < 0 or p != int(p):
        raise ValueError(f"p must be a non-negative integer, got {p}")
    aq = abs(int(q))
    bracket = 3.0 * p * (p + aq + 1) + 0.5 * aq * (aq + 3) + 1.0
    return 2.0 * (params.a * float(n)) ** 3 * bracket


def shift_integral_form(
    state: ParabolicState, field: FieldConfig, params: PhysicalParams
) -> float:
    """First-order shift assembled from the two closed-form integrals.

    (|e| eps / 4 a^3 n^4) (II_{n1,m-s} I_{n2,m+s} - I_{n1,m-s} II_{n2,m+s})
    """
    _check_state_params(state, params)
    nf = state.n.value
    term = integral_II(state.n1, state.q1, nf, params) * integral_I(
        state.n2, state.q2, nf, params
    ) - integral_I(state.n1, state.q1, nf, params) * integral_II(
        state.n2, state.q2, nf, params
    )
    return params.e_abs * field.epsilon / (4.0 * params.a**3 * nf**4) * term


def shift_closed_form(
    state: ParabolicState, field: FieldConfig, params: PhysicalParams
) -> float:
    """First-order Stark shift, exact bracket times the shift quantum.

    epsilon multiplies last, so scaling the field scales the shift with
    no extra rounding: e1 at field eps equals eps times e1 at unit
    field, bitwise.
    """
    _check_state_params(state, params)
    return (shift_unit(params) * (bracket_twelfths(state) / 12.0)) * field.epsilon


def shell_splitting(n, s, field: FieldConfig, params: PhysicalParams) -> float:
    """Distance between the extreme shell components at like m.

    Delta E_n = (3 hbar^2 |e| eps / mu gamma) n (n - |s| - 1): the
    separation of the mirror pair (n1, n2, m) <-> (n2, n1, m) with
    maximal |n1 - n2|, in which the m-linear fine term cancels.
    Equals the largest within-m-sector spread over the shell.
    """
    n, s = half(n), half(s)
    if s != params.s:
        raise ValueError(f"s={s} disagrees with params.s={params.s}")
    _check_shell(n, s)
    # n (n - |s| - 1) via doubled integers, exact
    prod = n.twice * (n - abs(s) - 1).twice / 4.0
    return (2.0 * shift_unit(params) * prod) * field.epsilon


def mean_dipole(state: ParabolicState, params: PhysicalParams) -> float:
    """Permanent dipole moment along x3 of the unperturbed state.

    d_z = -(3 hbar^2 |e| / 2 mu gamma) [n (n1 - n2 + (|m-s|-|m+s|)/2) + m s/3],
    which is -dE1/d eps identically.
    """
    _check_state_params(state, params)
    return -(shift_unit(params) * (bracket_twelfths(state) / 12.0)) + 0.0


def dipole_operator_expectation(state: ParabolicState, params: PhysicalParams) -> float:
    """Dipole along x3 evaluated from conserved-operator eigenvalues.

    d_z = |e| [3 gamma / (4 E0) I3 - hbar^2 s / (2 mu gamma) (J3/hbar)],
    with I3 the dimensionless Runge-Lenz projection hbar beta / gamma
    (equal to beta itself in units hbar = gamma = 1) and J3/hbar = m.
    Must reproduce mean_dipole state by state.
    """
    _check_state_params(state, params)
    e0 = energy_level(state.n, params)
    i3 = params.hbar * beta_eigenvalue(state, params) / params.gamma_c
    j3 = state.m.value
    return params.e_abs * (
        3.0 * params.gamma_c / (4.0 * e0) * i3
        - params.hbar**2 * state.s.value / (2.0 * params.mu * params.gamma_c) * j3
    )


def stark_table(
    n, s, field: FieldConfig, params: PhysicalParams
) -> list[StarkShiftRecord]:
    """One record per shell state, deterministically ordered.

    Sorting is by the shift (compared exactly through the integer
    bracket, so equal shifts are true ties) and then by (n1, n2, m).
    """
    states = enumerate_shell_parabolic(n, s)
    e0 = energy_level(n, params)
    records = [
        StarkShiftRecord(
            state=st,
            e0=e0,
            e1=shift_closed_form(st, field, params),
            dipole_z=mean_dipole(st, params),
        )
        for st in states
    ]

    def key(rec: StarkShiftRecord):
        shift_rank = bracket_twelfths(rec.state) if field.epsilon > 0 else 0
        return (shift_rank, rec.state.n1, rec.state.n2, rec.state.m.twice)

    records.sort(key=key)
    return records
