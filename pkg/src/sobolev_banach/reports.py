"""Shared report plumbing: log-log fits, a generic consistency report,
and JSON/CSV serialization helpers used by every checking module."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field, is_dataclass

import numpy as np


def fit_loglog(xs, ys) -> tuple[float, float]:
    """Least-squares slope and R^2 of log(y) against log(x).

    Callers filter out nonpositive entries; degenerate inputs (fewer than
    two distinct x) return (nan, 0.0).
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if xs.size < 2 or np.unique(xs).size < 2 or np.any(xs <= 0) or np.any(ys <= 0):
        return float("nan"), 0.0
    lx, ly = np.log(xs), np.log(ys)
    slope, intercept = np.polyfit(lx, ly, 1)
    pred = slope * lx + intercept
    ss_res = float(np.sum((ly - pred) ** 2))
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return float(slope), float(r2)


@dataclass
class ConsistencyReport:
    """Generic table-plus-verdict report.

    ``table`` rows are (label, value) pairs; when the rows form an
    (h, error) ladder the fitted log-log slope and its R^2 are recorded.
    """

    name: str
    table: list[tuple] = field(default_factory=list)
    fitted_slope: float | None = None
    residual: float | None = None
    verdict: str = "PASS"
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict in ("PASS", "BOUNDED", "STABLE", "CONFIRMS_FAILURE")

    def to_json(self) -> str:
        return json.dumps(to_jsonable(self), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["h", "value"])
        for row in self.table:
            w.writerow([repr(_plain(c)) if isinstance(c, float) else _plain(c) for c in row])
        return buf.getvalue()


def _plain(x):
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    return x


def to_jsonable(obj):
    """Recursively convert dataclasses/ndarrays/numpy scalars for json.dumps."""
    if is_dataclass(obj) and not isinstance(obj, type):
        return {k: to_jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        obj = obj.item()
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    return obj


def write_csv_rows(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(_plain(c)) if isinstance(_plain(c), float) else _plain(c) for c in row])
    return buf.getvalue()
