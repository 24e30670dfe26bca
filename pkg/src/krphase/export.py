"""Deterministic CSV/JSON writers for grids and verification reports.

Values are written with 17 significant digits, enough for a re-parse to
reproduce every float bit-identically, and nothing in the value section
depends on the environment.  The only non-reproducible element is an
optional creation timestamp confined to a clearly marked metadata line
that the ``reproducible`` switch suppresses.
"""

from __future__ import annotations

import datetime
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

__all__ = [
    "GridDocument",
    "grid_document_from_slice",
    "write_grid_csv",
    "write_grid_json",
    "read_grid_csv",
    "write_reports",
    "write_extrema",
    "load_schema",
]

SCHEMA_VERSION = 1


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


@dataclass(frozen=True)
class GridDocument:
    """A rectangular table of named value columns over one or two axes."""

    kind: str
    metadata: dict
    axes: tuple  # ((name, 1-D array), ...) with 1 or 2 entries
    columns: dict  # name -> array with shape = axis lengths (row-major)

    def __post_init__(self):
        if len(self.axes) not in (1, 2):
            raise ValueError("only 1- or 2-axis documents are supported")
        shape = tuple(len(arr) for _, arr in self.axes)
        for name, col in self.columns.items():
            if np.asarray(col).shape != shape:
                raise ValueError(f"column {name!r} does not match the axis grid {shape}")


def grid_document_from_slice(result) -> GridDocument:
    """Adapt a sampled slice to the export document shape."""
    meta = dict(result.metadata)
    if result.warnings:
        meta["warnings"] = "; ".join(result.warnings)
    return GridDocument(
        kind="slice",
        metadata=meta,
        axes=(("r", result.r), ("p", result.p)),
        columns={"value": result.values},
    )


def _header_lines(doc: GridDocument, reproducible: bool) -> list[str]:
    lines = [f"# krphase {doc.kind} export"]
    for key in sorted(doc.metadata):
        lines.append(f"# {key}: {_fmt(doc.metadata[key])}")
    if not reproducible:
        lines.append(f"# created: {_timestamp()}")
    return lines


def write_grid_csv(doc: GridDocument, path, reproducible: bool = False) -> None:
    lines = _header_lines(doc, reproducible)
    axis_names = [name for name, _ in doc.axes]
    col_names = list(doc.columns)
    lines.append(",".join(axis_names + col_names))
    flat_cols = [np.asarray(doc.columns[c]).ravel() for c in col_names]
    if len(doc.axes) == 1:
        a0 = doc.axes[0][1]
        for i, a in enumerate(a0):
            row = [_fmt(float(a))] + [_fmt(float(col[i])) for col in flat_cols]
            lines.append(",".join(row))
    else:
        a0, a1 = doc.axes[0][1], doc.axes[1][1]
        idx = 0
        for x in a0:
            for y in a1:
                row = [_fmt(float(x)), _fmt(float(y))] + [_fmt(float(col[idx])) for col in flat_cols]
                lines.append(",".join(row))
                idx += 1
    _write_text(path, "\n".join(lines) + "\n")


def write_grid_json(doc: GridDocument, path, reproducible: bool = False) -> None:
    meta = dict(doc.metadata)
    if not reproducible:
        meta["created"] = _timestamp()
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": doc.kind,
        "metadata": meta,
        "axes": {
            "names": [name for name, _ in doc.axes],
            **{name: [float(v) for v in arr] for name, arr in doc.axes},
        },
        "columns": list(doc.columns),
        "values": {
            name: np.asarray(col, dtype=float).tolist() for name, col in doc.columns.items()
        },
    }
    _write_text(path, json.dumps(payload, sort_keys=True, indent=1) + "\n")


def read_grid_csv(path):
    """Parse a CSV written by write_grid_csv; returns (metadata, names, data)."""
    metadata: dict[str, str] = {}
    header: list[str] | None = None
    rows: list[list[float]] = []
    for line in Path(path).read_text().splitlines():
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, _, value = body.partition(":")
                metadata[key.strip()] = value.strip()
            continue
        if header is None:
            header = line.split(",")
            continue
        rows.append([float(x) for x in line.split(",")])
    if header is None:
        raise ValueError(f"no data header found in {path}")
    return metadata, header, np.asarray(rows, dtype=float)


def write_reports(reports, exit_status: int, path, fmt: str = "json", reproducible: bool = False) -> None:
    """Serialize verification reports as JSON or CSV."""
    if fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "kind": "verification",
            "exit_status": exit_status,
            "checks": [
                {
                    "name": r.name,
                    "target": r.target,
                    "computed": r.computed,
                    "error": r.error,
                    "tolerance": r.tolerance,
                    "passed": r.passed,
                    "flagged": r.flagged,
                    "imag_residue": r.imag_residue,
                    "note": r.note,
                }
                for r in reports
            ],
        }
        if not reproducible:
            payload["created"] = _timestamp()
        _write_text(path, json.dumps(payload, sort_keys=True, indent=1) + "\n")
    elif fmt == "csv":
        lines = ["# krphase verification export"]
        if not reproducible:
            lines.append(f"# created: {_timestamp()}")
        lines.append("name,target,computed,error,tolerance,status,note")
        for r in reports:
            status = "flagged" if r.flagged else ("pass" if r.passed else "fail")
            note = r.note.replace(",", ";")
            lines.append(
                f"{r.name},{_fmt(r.target)},{_fmt(r.computed)},{_fmt(r.error)},"
                f"{_fmt(r.tolerance)},{status},{note}"
            )
        _write_text(path, "\n".join(lines) + "\n")
    else:
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")


def write_extrema(records, metadata: dict, path, fmt: str = "json", reproducible: bool = False) -> None:
    """Serialize extremum records as JSON or CSV."""
    rows = [
        {"r": r.r, "p": r.p, "value": r.value, "kind": r.kind, "boundary": r.boundary}
        for r in records
    ]
    if fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "kind": "extrema",
            "metadata": dict(metadata),
            "count": len(rows),
            "records": rows,
        }
        if not reproducible:
            payload["created"] = _timestamp()
        _write_text(path, json.dumps(payload, sort_keys=True, indent=1) + "\n")
    elif fmt == "csv":
        lines = ["# krphase extrema export"]
        for key in sorted(metadata):
            lines.append(f"# {key}: {_fmt(metadata[key])}")
        if not reproducible:
            lines.append(f"# created: {_timestamp()}")
        lines.append("r,p,value,kind,boundary")
        for row in rows:
            lines.append(
                f"{_fmt(row['r'])},{_fmt(row['p'])},{_fmt(row['value'])},"
                f"{row['kind']},{int(row['boundary'])}"
            )
        _write_text(path, "\n".join(lines) + "\n")
    else:
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")


def load_schema() -> dict:
    """The JSON schema shipped with the package for grid documents."""
    text = resources.files("krphase").joinpath("schemas/grid_document.schema.json").read_text()
    return json.loads(text)


def _write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OSError(f"failed to write {path}: {exc}") from exc
