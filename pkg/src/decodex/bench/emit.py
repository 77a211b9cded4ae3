"""Machine-readable sweep output: CSV and JSON."""

from __future__ import annotations

import json

from .sweep import EMIT_FIELDS, SweepRecord

CSV_HEADER = ",".join(EMIT_FIELDS)


def _sig6(value: float) -> float:
    return float(f"{value:.6g}")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def render_csv(records: list[SweepRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(",".join(_cell(getattr(r, f)) for f in EMIT_FIELDS))
    return "\n".join(lines) + "\n"


def render_json(records: list[SweepRecord]) -> str:
    rows = []
    for r in records:
        row = {}
        for f in EMIT_FIELDS:
            v = getattr(r, f)
            row[f] = _sig6(v) if isinstance(v, float) else v
        rows.append(row)
    return json.dumps(rows, indent=2) + "\n"


def emit(records: list[SweepRecord], format: str, path) -> None:
    """Write records with the fixed column set; floats carry 6 significant
    digits."""
    if not records:
        raise ValueError("no records to emit")
    if format == "csv":
        text = render_csv(records)
    elif format == "json":
        text = render_json(records)
    else:
        raise ValueError(f"unknown format {format!r}")
    with open(path, "w") as f:
        f.write(text)


def parse_csv(text: str) -> list[dict]:
    """Inverse of render_csv, for round-trip checks and downstream tooling."""
    lines = text.strip().split("\n")
    if lines[0] != CSV_HEADER:
        raise ValueError("unexpected CSV header")
    out = []
    for ln in lines[1:]:
        vals = ln.split(",")
        row = {}
        for key, val in zip(EMIT_FIELDS, vals):
            if key in ("backend", "clock_type"):
                row[key] = val
            elif key in ("mcs", "prb", "n_tb"):
                row[key] = int(val)
            else:
                row[key] = None if val == "" else float(val)
        out.append(row)
    return out
