"""Deterministic CSV/JSON rendering of result tables.

Half-integer quantum numbers are serialized losslessly as doubled
integers (columns s2, m2, j2).  Energies are rendered with ``repr``,
the shortest decimal string that parses back to the identical float,
so identical configurations produce byte-identical output and JSON
round-trips are exact.  JSON never contains NaN or Inf.
"""

from __future__ import annotations

import csv
import io
import json

from .stark import FieldConfig, StarkShiftRecord
from .states import PhysicalParams, SphericalState

__all__ = [
    "RECORD_COLUMNS",
    "rows_from_stark_records",
    "rows_from_spectrum",
    "render_csv",
    "render_json",
    "parse_json_records",
]

RECORD_COLUMNS = ["n", "s2", "n1", "n2", "m2", "j2", "e0", "e1", "dipole_z"]


def _clean(x) -> float:
    x = float(x)
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError("refusing to serialize a non-finite number")
    return x + 0.0 if x == 0.0 else x  # fold -0.0 into 0.0


def _num(x) -> str:
    return repr(_clean(x))


def rows_from_stark_records(records: list[StarkShiftRecord]) -> list[dict]:
    rows = []
    for rec in records:
        st = rec.state
        rows.append(
            {
                "n": st.n.value,
                "s2": st.s.twice,
                "n1": st.n1,
                "n2": st.n2,
                "m2": st.m.twice,
                "j2": None,
                "e0": rec.e0,
                "e1": rec.e1,
                "dipole_z": rec.dipole_z,
            }
        )
    return rows


def rows_from_spectrum(shell: list[SphericalState], e0: float) -> list[dict]:
    rows = []
    for st in sorted(shell, key=lambda x: x.sort_key):
        rows.append(
            {
                "n": st.n.value,
                "s2": st.s.twice,
                "n1": None,
                "n2": None,
                "m2": st.m.twice,
                "j2": st.j.twice,
                "e0": e0,
                "e1": None,
                "dipole_z": None,
            }
        )
    return rows


def _csv_cell(key: str, value) -> str:
    if value is None:
        return ""
    if key in ("s2", "n1", "n2", "m2", "j2"):
        return str(int(value))
    return _num(value)


def render_csv(rows: list[dict], columns: list[str] | None = None) -> str:
    """RFC-4180 text (CRLF line ends, header row first)."""
    columns = columns or RECORD_COLUMNS
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(c, row.get(c)) for c in columns])
    return buf.getvalue()


def _json_row(row: dict) -> dict:
    out = {}
    for key, value in row.items():
        if value is None:
            out[key] = None
        elif key in ("s2", "n1", "n2", "m2", "j2"):
            out[key] = int(value)
        elif key in ("e0", "e1"):
            out[key] = _num(value)  # decimal strings: exact round trip
        else:
            out[key] = _clean(value)
    return out


def render_json(
    rows: list[dict],
    params: PhysicalParams,
    field: FieldConfig | None = None,
    ratio: float | None = None,
) -> str:
    doc = {
        "params": {
            "hbar": params.hbar,
            "mu": params.mu,
            "gamma": params.gamma_c,
            "e_abs": params.e_abs,
            "s2": params.s.twice,
            "a": params.a,
        },
        "field": {
            "epsilon": field.epsilon if field is not None else 0.0,
            "perturbative_ratio": ratio,
        },
        "records": [_json_row(r) for r in rows],
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def parse_json_records(text: str) -> list[dict]:
    """Inverse of render_json for the records array (strings to floats)."""
    doc = json.loads(text)
    rows = []
    for raw in doc["records"]:
        row = dict(raw)
        for key in ("e0", "e1"):
            if row.get(key) is not None:
                row[key] = float(row[key])
        rows.append(row)
    return rows
