"""Comparing CVI score rows against a ground-truth row, and aggregating the
outcomes across datasets.

Two comparison plans are supported. ``hit``: does the index give its best
score to a method that also gets the best ground-truth score? ``rankdiff``:
quantize each score row onto N-1 uniform intervals between its min and max,
then sum the absolute rank differences; 0 means the rows order the methods
identically, and the value is at most N(N-2).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dataset import ParseError
from .indices import MAX_OPTIMAL, MIN_OPTIMAL

__all__ = [
    "PLANS",
    "EvaluationReport",
    "ScoreMatrix",
    "ScoreRow",
    "aggregate",
    "clamp_sentinels",
    "compare_row",
    "competition_ranks",
    "hit_the_best",
    "quantize_to_ranks",
    "rank_difference",
    "read_report_json",
    "read_score_matrix",
    "write_report_csv",
    "write_report_json",
    "write_score_matrix",
]

PLANS = ("hit", "rankdiff")


@dataclass
class ScoreRow:
    """One index's scores across clustering methods."""

    name: str
    direction: str  # MAX_OPTIMAL or MIN_OPTIMAL
    methods: tuple[str, ...]
    scores: np.ndarray

    def __post_init__(self):
        self.methods = tuple(self.methods)
        self.scores = np.asarray(self.scores, dtype=np.float64)
        if self.direction not in (MAX_OPTIMAL, MIN_OPTIMAL):
            raise ValueError(f"direction must be {MAX_OPTIMAL!r} or {MIN_OPTIMAL!r}")
        if self.scores.ndim != 1 or len(self.scores) != len(self.methods):
            raise ValueError(f"row {self.name!r}: scores do not match methods")
        if len(self.methods) < 2:
            raise ValueError(f"row {self.name!r}: need at least two methods")


@dataclass
class ScoreMatrix:
    """Score rows sharing one method list (one dataset's scoring table)."""

    methods: tuple[str, ...]
    rows: list[ScoreRow] = field(default_factory=list)

    def __post_init__(self):
        self.methods = tuple(self.methods)
        for row in self.rows:
            if row.methods != self.methods:
                raise ValueError(f"row {row.name!r} has mismatched methods")

    def row(self, name: str) -> ScoreRow:
        for row in self.rows:
            if row.name.lower() == name.lower():
                return row
        raise ValueError(f"no row named {name!r}")


def clamp_sentinels(scores, direction: str) -> np.ndarray:
    """Replace non-finite scores with the row's worst finite value.

    Degenerate index outputs must never win a row; after clamping they share
    the worst rank. A row with no finite value at all collapses to zeros.
    """
    s = np.asarray(scores, dtype=np.float64).copy()
    finite = np.isfinite(s)
    if not finite.any():
        return np.zeros_like(s)
    worst = s[finite].min() if direction == MAX_OPTIMAL else s[finite].max()
    s[~finite] = worst
    return s


def quantize_to_ranks(scores, direction: str) -> np.ndarray:
    """Quantize N scores onto N-1 uniform intervals of [min, max].

    Intervals are labeled 1 (containing the max) down to N-1 (containing the
    min) and are left-open, right-closed; the lowest interval is closed at
    the min. Min-optimal rows are negated first so rank 1 is always best.
    Constant rows give every score rank 1. Scores must be finite (clamp
    sentinels first).
    """
    s = np.asarray(scores, dtype=np.float64)
    n = s.size
    if n < 2:
        raise ValueError("need at least two scores to rank")
    if not np.all(np.isfinite(s)):
        raise ValueError("scores must be finite after sentinel substitution")
    if direction == MIN_OPTIMAL:
        s = -s
    elif direction != MAX_OPTIMAL:
        raise ValueError(f"direction must be {MAX_OPTIMAL!r} or {MIN_OPTIMAL!r}")
    mx = s.max()
    mn = s.min()
    if mx == mn:
        return np.ones(n, dtype=np.int64)
    width = (mx - mn) / (n - 1)
    # interior boundaries; exact comparisons, no epsilon fuzzing
    bounds = mx - width * np.arange(1, n - 1)
    return 1 + (s[:, None] <= bounds[None, :]).sum(axis=1).astype(np.int64)


def rank_difference(a, b) -> int:
    """Sum of absolute differences of two rank sequences; 0 iff identical,
    at most N(N-2)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    return int(np.abs(a - b).sum())


def _optimal_set(row: ScoreRow) -> set[int]:
    """Method positions achieving the row's best finite score (exact ties)."""
    finite = np.isfinite(row.scores)
    if not finite.any():
        return set()
    best = row.scores[finite].max() if row.direction == MAX_OPTIMAL else row.scores[finite].min()
    return set(np.flatnonzero(finite & (row.scores == best)).tolist())


def _check_compatible(cvi: ScoreRow, truth: ScoreRow) -> None:
    if cvi.methods != truth.methods:
        raise ValueError(
            f"method mismatch between rows {cvi.name!r} and {truth.name!r}"
        )


def hit_the_best(cvi: ScoreRow, truth: ScoreRow) -> int:
    """1 iff some method is best (exact-tie set, direction-aware) under both
    the index row and the ground-truth row."""
    _check_compatible(cvi, truth)
    return int(bool(_optimal_set(cvi) & _optimal_set(truth)))


def compare_row(cvi: ScoreRow, truth: ScoreRow, plan: str) -> int:
    """Outcome of comparing one index row with the ground-truth row."""
    if plan not in PLANS:
        raise ValueError(f"plan must be one of {PLANS}")
    if plan == "hit":
        return hit_the_best(cvi, truth)
    _check_compatible(cvi, truth)
    cvi_ranks = quantize_to_ranks(clamp_sentinels(cvi.scores, cvi.direction), cvi.direction)
    truth_ranks = quantize_to_ranks(
        clamp_sentinels(truth.scores, truth.direction), truth.direction
    )
    return rank_difference(cvi_ranks, truth_ranks)


def competition_ranks(totals, larger_better: bool) -> np.ndarray:
    """1224-style ranking: equal totals share a rank, later ranks skip."""
    t = np.asarray(totals, dtype=np.float64)
    if larger_better:
        return 1 + (t[None, :] > t[:, None]).sum(axis=1).astype(np.int64)
    return 1 + (t[None, :] < t[:, None]).sum(axis=1).astype(np.int64)


@dataclass
class EvaluationReport:
    """Per-dataset comparison outcomes with their cross-dataset totals."""

    plan: str
    index_names: tuple[str, ...]
    dataset_names: tuple[str, ...]
    outcomes: np.ndarray  # (n_datasets, n_indices) int
    totals: np.ndarray  # (n_indices,) int column sums
    final_ranks: np.ndarray  # (n_indices,) competition ranks of the totals
    skipped: tuple[tuple[str, str], ...] = ()  # (dataset, reason)


def aggregate(outcomes, plan: str, dataset_names, index_names, skipped=()) -> EvaluationReport:
    """Column-sum the per-dataset outcomes and rank the totals.

    ``hit`` totals rank best-is-largest; ``rankdiff`` totals rank
    best-is-smallest.
    """
    if plan not in PLANS:
        raise ValueError(f"plan must be one of {PLANS}")
    out = np.asarray(outcomes, dtype=np.int64)
    if out.ndim != 2 or out.size == 0:
        raise ValueError("outcomes must be a non-empty (datasets x indices) matrix")
    dataset_names = tuple(dataset_names)
    index_names = tuple(index_names)
    if out.shape != (len(dataset_names), len(index_names)):
        raise ValueError("outcome matrix shape does not match the given names")
    totals = out.sum(axis=0)
    ranks = competition_ranks(totals, larger_better=(plan == "hit"))
    return EvaluationReport(
        plan=plan,
        index_names=index_names,
        dataset_names=dataset_names,
        outcomes=out,
        totals=totals,
        final_ranks=ranks,
        skipped=tuple((str(a), str(b)) for a, b in skipped),
    )


# ---------------------------------------------------------------------------
# file formats

_DIRECTION_TOKENS = {"max": MAX_OPTIMAL, "min": MIN_OPTIMAL}


def read_score_matrix(path, *, delimiter: str = ",") -> ScoreMatrix:
    """Read a score-matrix CSV: a header naming the methods from column 3
    onward, then one row per index as (name, max|min, scores...)."""
    path = Path(path)
    with open(path, "r", encoding="utf-8", newline="") as fh:
        records = [r for r in csv.reader(fh, delimiter=delimiter) if any(c.strip() for c in r)]
    if len(records) < 2:
        raise ParseError(f"{path.name}: need a header and at least one score row")
    header = records[0]
    if len(header) < 4:
        raise ParseError(f"{path.name}: need at least two method columns")
    methods = tuple(c.strip() for c in header[2:])
    rows = []
    for rec in records[1:]:
        if len(rec) != len(header):
            raise ParseError(f"{path.name}: row {rec[0]!r} has {len(rec)} fields, expected {len(header)}")
        name = rec[0].strip()
        direction = _DIRECTION_TOKENS.get(rec[1].strip().lower())
        if direction is None:
            raise ParseError(f"{path.name}: row {name!r}: direction must be max or min")
        try:
            scores = np.array([float(c) for c in rec[2:]], dtype=np.float64)
        except ValueError:
            raise ParseError(f"{path.name}: row {name!r}: non-numeric score") from None
        rows.append(ScoreRow(name, direction, methods, scores))
    return ScoreMatrix(methods, rows)


def _format_score(v: float) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return repr(float(v))


def write_score_matrix(matrix: ScoreMatrix, path, *, delimiter: str = ",") -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    writer.writerow(["index", "direction", *matrix.methods])
    for row in matrix.rows:
        writer.writerow([row.name, row.direction, *(_format_score(v) for v in row.scores)])
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def write_report_csv(report: EvaluationReport, path) -> None:
    """Per-dataset rows, a "Total (rank)" footer, then any skipped datasets."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["dataset", *report.index_names])
    for name, row in zip(report.dataset_names, report.outcomes):
        writer.writerow([name, *(int(v) for v in row)])
    writer.writerow(
        ["Total (rank)"]
        + [f"{int(t)} ({int(r)})" for t, r in zip(report.totals, report.final_ranks)]
    )
    for name, reason in report.skipped:
        writer.writerow([f"skipped:{name}", reason])
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def write_report_json(report: EvaluationReport, path, *, provenance: dict | None = None) -> None:
    payload = {
        "plan": report.plan,
        "indices": list(report.index_names),
        "datasets": list(report.dataset_names),
        "outcomes": [[int(v) for v in row] for row in report.outcomes],
        "totals": [int(v) for v in report.totals],
        "ranks": [int(v) for v in report.final_ranks],
        "skipped": [{"dataset": d, "reason": r} for d, r in report.skipped],
    }
    if provenance is not None:
        payload["provenance"] = provenance
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def read_report_json(path) -> EvaluationReport:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    return aggregate(
        np.array(payload["outcomes"], dtype=np.int64),
        payload["plan"],
        payload["datasets"],
        payload["indices"],
        skipped=[(s["dataset"], s["reason"]) for s in payload["skipped"]],
    )
