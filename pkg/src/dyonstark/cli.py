"""Command-line front end.

Subcommands compute spectra, Stark shift tables, splitting summaries,
dipole moments, wavefunction grids, and run the verification suite.
Output is deterministic CSV (RFC 4180) or JSON: identical invocations
produce byte-identical bytes.

Exit codes: 0 success, 2 invalid quantum numbers or options, 3 when
``verify`` finds any tolerance breach.
"""

from __future__ import annotations

import json
import math
import sys

import click
import numpy as np

from . import oracle, stark, states, tables, verify
from .specfun import half
from .stark import FieldConfig
from .states import ParabolicPoint, ParabolicState, PhysicalParams, SphericalState

WAVEFUNCTION_COLUMNS = ["coord1", "coord2", "phi", "psi_re", "psi_im", "abs2"]
SPLITTING_COLUMNS = ["n", "s2", "epsilon", "delta_e"]


def _parse_half(value: str, name: str):
    try:
        return half(value)
    except (ValueError, TypeError) as exc:
        raise click.BadParameter(str(exc), param_hint=f"--{name}")


def _fail_validation(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(2)


def _emit(text: str, output: str | None) -> None:
    if output in (None, "-"):
        click.get_text_stream("stdout").write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _render(rows, columns, fmt, params, field=None, ratio=None, output=None):
    if fmt == "csv":
        _emit(tables.render_csv(rows, columns), output)
    else:
        _emit(tables.render_json(rows, params, field=field, ratio=ratio), output)


def _common_options(fn):
    fn = click.option(
        "--quad-order",
        type=click.IntRange(min=1, max=200),
        default=None,
        envvar=oracle.QUAD_ORDER_ENV,
        help="Gauss-Laguerre order for numerical cross-checks (default 48).",
    )(fn)
    fn = click.option("--output", "-o", default="-", help="Output path, '-' for stdout.")(fn)
    fn = click.option(
        "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True
    )(fn)
    fn = click.option("--gamma", type=float, default=1.0, show_default=True, help="Coulomb coupling gamma.")(fn)
    fn = click.option("--s", "s_str", default="0", show_default=True, help="Monopole number (e.g. 1, 1/2, -3/2).")(fn)
    return fn


@click.group()
@click.version_option(package_name="dyonstark", prog_name="dyonstark")
def main():
    """Bound states and the linear Stark effect of a charge-dyon system."""


@main.command()
@_common_options
@click.option("--n", "n_str", required=True, help="Principal level (e.g. 3 or 5/2).")
def spectrum(s_str, n_str, gamma, fmt, output, quad_order):
    """Shell energy and spherical quantum-number table."""
    s = _parse_half(s_str, "s")
    n = _parse_half(n_str, "n")
    try:
        params = PhysicalParams.atomic(s, gamma_c=gamma)
        shell = states.enumerate_shell_spherical(n, s)
        e0 = states.energy_level(n, params)
    except ValueError as exc:
        _fail_validation(exc)
    rows = tables.rows_from_spectrum(shell, e0)
    _render(rows, tables.RECORD_COLUMNS, fmt, params, output=output)


def _echo_ratio(ratio: float) -> None:
    # first-order theory is credible while this stays well below one
    click.echo(f"perturbative ratio |e| eps a^2 n^4 / gamma = {ratio!r}", err=True)


def _stark_rows(s_str, n_str, gamma, epsilon):
    s = _parse_half(s_str, "s")
    n = _parse_half(n_str, "n")
    try:
        params = PhysicalParams.atomic(s, gamma_c=gamma)
        field = FieldConfig(epsilon)
        records = stark.stark_table(n, s, field, params)
    except ValueError as exc:
        _fail_validation(exc)
    ratio = field.perturbative_ratio(n, params)
    _echo_ratio(ratio)
    return params, field, ratio, tables.rows_from_stark_records(records)


@main.command()
@_common_options
@click.option("--n", "n_str", required=True, help="Principal level.")
@click.option("--epsilon", type=float, default=1.0, show_default=True, help="Field strength.")
def shifts(s_str, n_str, gamma, epsilon, fmt, output, quad_order):
    """First-order Stark shift table for one shell."""
    params, field, ratio, rows = _stark_rows(s_str, n_str, gamma, epsilon)
    _render(rows, tables.RECORD_COLUMNS, fmt, params, field=field, ratio=ratio, output=output)


@main.command()
@_common_options
@click.option("--n", "n_str", required=True, help="Principal level.")
@click.option("--epsilon", type=float, default=0.0, show_default=True, help="Field strength.")
def dipole(s_str, n_str, gamma, epsilon, fmt, output, quad_order):
    """Permanent dipole moments of one shell (e1 at the given field)."""
    params, field, ratio, rows = _stark_rows(s_str, n_str, gamma, epsilon)
    _render(rows, tables.RECORD_COLUMNS, fmt, params, field=field, ratio=ratio, output=output)


@main.command()
@_common_options
@click.option("--n", "n_str", required=True, help="Principal level.")
@click.option("--epsilon", type=float, default=1.0, show_default=True, help="Field strength.")
def splitting(s_str, n_str, gamma, epsilon, fmt, output, quad_order):
    """Distance between the extreme like-m components of a shell."""
    s = _parse_half(s_str, "s")
    n = _parse_half(n_str, "n")
    try:
        params = PhysicalParams.atomic(s, gamma_c=gamma)
        field = FieldConfig(epsilon)
        delta = stark.shell_splitting(n, s, field, params)
    except ValueError as exc:
        _fail_validation(exc)
    rows = [{"n": n.value, "s2": s.twice, "epsilon": epsilon, "delta_e": delta}]
    ratio = field.perturbative_ratio(n, params)
    _echo_ratio(ratio)
    _render(rows, SPLITTING_COLUMNS, fmt, params, field=field, ratio=ratio, output=output)


@main.command()
@_common_options
@click.option("--n", "n_str", required=True, help="Principal level.")
@click.option("--basis", type=click.Choice(["parabolic", "spherical"]), default="parabolic", show_default=True)
@click.option("--n1", type=int, default=None, help="Parabolic n1 (default: first shell state).")
@click.option("--n2", type=int, default=None, help="Parabolic n2.")
@click.option("--j", "j_str", default=None, help="Spherical j (half-integers allowed).")
@click.option("--m", "m_str", default=None, help="Projection m (half-integers allowed).")
@click.option("--points", type=click.IntRange(min=2, max=512), default=24, show_default=True)
@click.option("--extent", type=float, default=16.0, show_default=True, help="Grid reach in units of a.")
@click.option("--phi", type=float, default=0.0, show_default=True, help="Azimuth of the sampling plane.")
def wavefunction(s_str, n_str, gamma, basis, n1, n2, j_str, m_str, points, extent, phi, fmt, output, quad_order):
    """Wavefunction values on a coordinate grid (one azimuthal plane).

    Parabolic basis: coord1 = xi, coord2 = eta.  Spherical basis:
    coord1 = r, coord2 = theta.
    """
    s = _parse_half(s_str, "s")
    n = _parse_half(n_str, "n")
    if extent <= 0:
        _fail_validation(ValueError("--extent must be positive"))
    try:
        params = PhysicalParams.atomic(s, gamma_c=gamma)
        rows = []
        if basis == "parabolic":
            if n1 is None and n2 is None and m_str is None:
                state = states.enumerate_shell_parabolic(n, s)[0]
            else:
                m = _parse_half(m_str if m_str is not None else "0", "m")
                state = ParabolicState(n1 or 0, n2 or 0, m, s)
                if state.n != n:
                    raise ValueError(
                        f"(n1={state.n1}, n2={state.n2}, m={state.m}) belongs to shell "
                        f"n={state.n}, not n={n}"
                    )
            grid = np.linspace(0.0, extent * params.a, points)
            for xi in grid:
                for eta in grid:
                    psi = states.parabolic_psi(state, ParabolicPoint(xi, eta, phi), params)
                    rows.append(_wf_row(xi, eta, phi, psi))
        else:
            j = _parse_half(j_str if j_str is not None else str(abs(s).value), "j")
            m = _parse_half(m_str if m_str is not None else "0", "m")
            state = SphericalState(n=n, j=j, m=m, s=s)
            r_grid = np.linspace(0.0, extent * params.a, points)
            th_grid = np.linspace(0.0, math.pi, points)
            for r in r_grid:
                for th in th_grid:
                    psi = states.spherical_psi(state, r, th, phi, params)
                    rows.append(_wf_row(r, th, phi, psi))
    except ValueError as exc:
        _fail_validation(exc)
    _render(rows, WAVEFUNCTION_COLUMNS, fmt, params, output=output)


def _wf_row(c1, c2, phi, psi) -> dict:
    psi = complex(psi)
    return {
        "coord1": float(c1),
        "coord2": float(c2),
        "phi": float(phi),
        "psi_re": psi.real,
        "psi_im": psi.imag,
        "abs2": abs(psi) ** 2,
    }


@main.command(name="verify")
@click.option("--max-n", "max_n_str", default=None, help="Cap shell ranges (quick mode).")
@click.option("--check", "only", multiple=True, help="Run only the named checks (repeatable).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--output", "-o", default="-", help="Output path, '-' for stdout.")
@click.option("--list", "list_only", is_flag=True, help="List check IDs and exit.")
def verify_cmd(max_n_str, only, fmt, output, list_only):
    """Run the named verification checks; exit 3 on any breach."""
    if list_only:
        _emit("\n".join(verify.check_ids()) + "\n", output)
        return
    max_n = None
    if max_n_str is not None:
        max_n = float(_parse_half(max_n_str, "max-n").value)
    names = list(only) if only else verify.check_ids()
    unknown = [nm for nm in names if nm not in verify.CHECKS]
    if unknown:
        _fail_validation(ValueError(f"unknown check ids: {', '.join(unknown)}"))
    results = [verify.run_check(nm, max_n=max_n) for nm in names]
    failures = [r.check_id for r in results if not r.passed]
    if fmt == "json":
        doc = {
            "checks": [
                {
                    "id": r.check_id,
                    "passed": r.passed,
                    "max_err": r.max_err,
                    "tol": r.tol,
                    "detail": r.detail,
                    "notes": r.notes,
                }
                for r in results
            ],
            "failures": failures,
        }
        _emit(json.dumps(doc, indent=2, allow_nan=False) + "\n", output)
    else:
        lines = [r.line() for r in results]
        lines.append(f"{len(results) - len(failures)}/{len(results)} checks passed")
        if failures:
            lines.append("failures: " + json.dumps(failures))
        _emit("\n".join(lines) + "\n", output)
    if failures:
        sys.exit(3)


if __name__ == "__main__":
    main()
