"""Scalar curvature and the scale invariant H = V^(1/d) * S of Einstein metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .einstein import EinsteinSolution, MetricParams, _lookup, ricci_generic

H_TOLERANCE = 1e-6


def _entries(metric) -> tuple[float, ...]:
    x = tuple(metric.x) if isinstance(metric, (MetricParams,)) else tuple(metric)
    if any(v <= 0 for v in x):
        raise ValueError("metric entries must be positive")
    return x


def scalar_curvature(dec, triples, metric) -> float:
    """Sum of d_i r_i over the isotropy summands."""
    x = _entries(metric)
    r = ricci_generic(dec.dims, triples, x)
    return float(sum(d * ri for d, ri in zip(dec.dims, r)))


def scalar_curvature_expanded(dec, triples, metric) -> float:
    """The same quantity written as one sum over all ordered index triples."""
    x = _entries(metric)
    s = len(x)
    first = sum(d / v for d, v in zip(dec.dims, x)) / 2
    second = 0.0
    for i in range(s):
        for j in range(s):
            for k in range(s):
                c = _lookup(triples, i + 1, j + 1, k + 1)
                if c:
                    second += float(c) * x[k] / (x[i] * x[j])
    return float(first - second / 4)


def normalized_volume(dec, metric) -> float:
    """Product of x_i^d_i, returned in log form would lose nothing; kept plain for reports."""
    x = _entries(metric)
    return math.exp(sum(d * math.log(v) for d, v in zip(dec.dims, x)))


def scale_invariant(dec, triples, metric) -> float:
    x = _entries(metric)
    d = sum(dec.dims)
    log_root = sum(di * math.log(v) for di, v in zip(dec.dims, x)) / d
    return math.exp(log_root) * scalar_curvature(dec, triples, x)


@dataclass(frozen=True)
class ScaleRecord:
    metric: tuple[float, ...]
    kind: str
    scalar_curvature: float
    volume: float
    invariant: float

    def to_dict(self) -> dict:
        return {
            "metric": list(self.metric),
            "kind": self.kind,
            "scalar_curvature": self.scalar_curvature,
            "volume": self.volume,
            "H": self.invariant,
        }


@dataclass(frozen=True)
class ScaleReport:
    records: tuple[ScaleRecord, ...]
    groups: tuple[tuple[int, ...], ...]
    verdicts: tuple[tuple[int, int, str], ...]

    def to_dict(self) -> dict:
        return {
            "records": [r.to_dict() for r in self.records],
            "groups": [list(g) for g in self.groups],
            "pairs": [{"i": i, "j": j, "verdict": v} for i, j, v in self.verdicts],
        }


def same_invariant(a: float, b: float, tol: float = H_TOLERANCE) -> bool:
    return abs(a - b) <= tol * max(abs(a), abs(b), 1.0)


def isometry_report(dec, triples, solutions: Sequence, tol: float = H_TOLERANCE) -> ScaleReport:
    """Group solutions by H.  Equal H never proves an isometry, so such pairs stay inconclusive."""
    records = []
    for sol in solutions:
        if isinstance(sol, EinsteinSolution):
            metric, kind = sol.metric.x, sol.kind
        else:
            metric, kind = _entries(sol), ""
        records.append(
            ScaleRecord(
                tuple(metric),
                kind,
                scalar_curvature(dec, triples, metric),
                normalized_volume(dec, metric),
                scale_invariant(dec, triples, metric),
            )
        )
    groups: list[list[int]] = []
    for n, rec in enumerate(records):
        for g in groups:
            if same_invariant(records[g[0]].invariant, rec.invariant, tol):
                g.append(n)
                break
        else:
            groups.append([n])
    verdicts = []
    for i in range(len(records)):
        for j in range(i + 1, len(records)):
            same = same_invariant(records[i].invariant, records[j].invariant, tol)
            verdicts.append((i, j, "indistinguishable by H" if same else "non-isometric"))
    return ScaleReport(tuple(records), tuple(tuple(g) for g in groups), tuple(verdicts))
