"""Reading and writing datasets.

Formats
-------
csv_matrix   rectangular numeric table, one observation per row
csv_curves   first row holds the grid abscissae, each further row one curve
json_mixed   {"grid": [...], "observations": [{"vector": [...], "curve": [...]}, ...]}
             where "curve" may be a list of channels and either key may be absent
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .data import Dataset, Grid

FORMATS = ("csv_matrix", "csv_curves", "json_mixed")


class InputError(ValueError):
    """Malformed input file."""


def _read_rows(path, delimiter, header):
    try:
        with open(path, newline="") as fh:
            rows = [r for r in csv.reader(fh, delimiter=delimiter) if r and any(c.strip() for c in r)]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if header:
        rows = rows[1:]
    if not rows:
        raise InputError(f"{path} holds no data rows")
    width = len(rows[0])
    for i, r in enumerate(rows):
        if len(r) != width:
            raise InputError(f"row {i} has {len(r)} fields, expected {width}")
    try:
        arr = np.array([[float(c) for c in r] for r in rows], dtype=np.float64)
    except ValueError as exc:
        raise InputError(f"non-numeric field in {path}: {exc}") from exc
    if not np.all(np.isfinite(arr)):
        raise InputError(f"non-finite value in {path}")
    return arr


def read_csv_matrix(path, delimiter=",", header=False) -> Dataset:
    return Dataset(vectors=_read_rows(path, delimiter, header))


def read_csv_curves(path, delimiter=",", header=False) -> Dataset:
    arr = _read_rows(path, delimiter, header)
    if arr.shape[0] < 2:
        raise InputError("curves file needs a grid row and at least one curve")
    try:
        grid = Grid.from_points(arr[0])
    except ValueError as exc:
        raise InputError(f"bad grid row: {exc}") from exc
    return Dataset(curves=arr[1:], grid=grid)


def read_json_mixed(path) -> Dataset:
    try:
        doc = json.loads(Path(path).read_text())
        obs = doc["observations"]
        vecs = [o["vector"] for o in obs] if "vector" in obs[0] else None
        curves = [o["curve"] for o in obs] if "curve" in obs[0] else None
        grid = Grid.from_points(doc["grid"]) if curves is not None else None
        data = Dataset(
            vectors=None if vecs is None else np.array(vecs, dtype=np.float64),
            curves=None if curves is None else np.array(curves, dtype=np.float64),
            grid=grid,
        )
    except (OSError, KeyError, IndexError, TypeError, ValueError) as exc:
        raise InputError(f"malformed mixed-data file {path}: {exc}") from exc
    if (data.vectors is not None and not np.all(np.isfinite(data.vectors))) or \
            (data.curves is not None and not np.all(np.isfinite(data.curves))):
        raise InputError("non-finite value in mixed-data file")
    return data


def read_dataset(path, fmt="csv_matrix", delimiter=",", header=False) -> Dataset:
    if fmt == "csv_matrix":
        return read_csv_matrix(path, delimiter, header)
    if fmt == "csv_curves":
        return read_csv_curves(path, delimiter, header)
    if fmt == "json_mixed":
        return read_json_mixed(path)
    raise InputError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def fmt_num(x) -> str:
    return f"{float(x):.12g}"


def write_dataset(data: Dataset, path) -> str:
    """Write in the natural format for the data; returns the format name."""
    path = Path(path)
    if data.kind == "multivariate":
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            for row in data.vectors:
                w.writerow([repr(float(v)) for v in row])
        return "csv_matrix"
    if data.kind == "functional" and data.channels == 1:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow([repr(float(v)) for v in data.grid.t])
            for row in data.curves[:, 0, :]:
                w.writerow([repr(float(v)) for v in row])
        return "csv_curves"
    obs = []
    for i in range(data.n):
        o = {}
        if data.vectors is not None:
            o["vector"] = data.vectors[i].tolist()
        if data.curves is not None:
            o["curve"] = data.curves[i].tolist()
        obs.append(o)
    path.write_text(json.dumps({"grid": data.grid.t.tolist(), "observations": obs}))
    return "json_mixed"
