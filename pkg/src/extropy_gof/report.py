"""Rendering of grids and test reports as markdown, CSV or JSON lines."""

from __future__ import annotations

import csv
import io
import json
from typing import Callable, Mapping, Optional, Sequence

FORMATS = ("markdown", "csv", "json-lines")


def _cell(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.4f}"


def render_grid(
    title: str,
    sizes: Sequence[int],
    windows: Sequence[int],
    lookup: Callable[[int, int], Optional[float]],
    fmt: str,
    meta: Mapping[str, object],
) -> str:
    """Rows are windows ``m``, columns sample sizes ``N``; ``lookup`` returns None for blanks."""
    rows = [(m, [lookup(N, m) for N in sizes]) for m in windows]
    rows = [(m, vals) for m, vals in rows if any(v is not None for v in vals)]
    if fmt == "markdown":
        head = f"### {title}\n\n" + ", ".join(f"{k}={v}" for k, v in meta.items()) + "\n\n"
        lines = ["| m \\ N | " + " | ".join(str(N) for N in sizes) + " |"]
        lines.append("|---" * (len(sizes) + 1) + "|")
        for m, vals in rows:
            lines.append(f"| {m} | " + " | ".join(_cell(v) for v in vals) + " |")
        return head + "\n".join(lines) + "\n"
    records = [
        {**meta, "N": N, "m": m, "value": v}
        for m, vals in rows
        for N, v in zip(sizes, vals)
        if v is not None
    ]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=[*meta.keys(), "N", "m", "value"], lineterminator="\n")
        writer.writeheader()
        for r in records:
            writer.writerow({**r, "value": f"{r['value']:.6g}"})
        return buf.getvalue()
    if fmt == "json-lines":
        return "".join(json.dumps(r, sort_keys=False) + "\n" for r in records)
    raise ValueError(f"unknown format {fmt!r}")


def render_record(title: str, record: Mapping[str, object], fmt: str) -> str:
    """One key/value record, e.g. a test report."""
    if fmt == "markdown":
        lines = [f"### {title}", "", "| field | value |", "|---|---|"]
        for k, v in record.items():
            shown = "" if v is None else f"{v:.6g}" if isinstance(v, float) else v
            lines.append(f"| {k} | {shown} |")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(record), lineterminator="\n")
        writer.writeheader()
        writer.writerow({k: ("" if v is None else repr(v) if isinstance(v, float) else v) for k, v in record.items()})
        return buf.getvalue()
    if fmt == "json-lines":
        return json.dumps(dict(record)) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
