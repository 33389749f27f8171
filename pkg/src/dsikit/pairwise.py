"""Intra-class (ICD) and between-class (BCD) Euclidean distance samples.

An ICD set holds the distances between all unordered point pairs within one
class; a BCD set holds the distances between all cross-class pairs. Both are
materialized, sorted ascending, and exact up to a configurable pair-count
budget; above the budget a seeded uniform subsample of pairs is drawn and the
result is flagged as inexact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist, pdist

from .dataset import as_point_matrix

__all__ = [
    "DEFAULT_PAIR_BUDGET",
    "DistanceSample",
    "bcd_set",
    "class_complement_bcd",
    "euclidean_distance",
    "icd_set",
]

#: Largest number of pairs materialized exactly before subsampling kicks in.
DEFAULT_PAIR_BUDGET = 50_000_000

_CHUNK = 1 << 20


@dataclass
class DistanceSample:
    """A sorted multiset of nonnegative pair distances.

    ``exact`` is False when the values are a seeded uniform subsample of the
    ``total_pairs`` available pairs (drawn with replacement); ``subsample_seed``
    records the generator seed used in that case.
    """

    values: np.ndarray
    total_pairs: int
    exact: bool = True
    subsample_seed: int | None = None

    @property
    def count(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)


def euclidean_distance(a, b) -> float:
    """l2-norm distance between two points of equal dimension."""
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return float(np.linalg.norm(a - b))


def _condensed_to_pair(lin: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Invert the condensed upper-triangle pair index: lin -> (i, j), i < j."""
    lin = np.asarray(lin, dtype=np.int64)
    i = ((2 * n - 1) - np.sqrt((2 * n - 1) ** 2 - 8 * lin.astype(np.float64))) // 2
    i = i.astype(np.int64)
    # float sqrt may land one row off; nudge into the correct triangle row
    for _ in range(2):
        row_start = i * (2 * n - i - 1) // 2
        i = np.where(row_start > lin, i - 1, i)
        row_next = (i + 1) * (2 * n - i - 2) // 2
        i = np.where(lin >= row_next, i + 1, i)
    row_start = i * (2 * n - i - 1) // 2
    j = lin - row_start + i + 1
    return i, j


def _pair_distances(a: np.ndarray, b: np.ndarray, i: np.ndarray, j: np.ndarray) -> np.ndarray:
    out = np.empty(len(i), dtype=np.float64)
    for start in range(0, len(i), _CHUNK):
        sl = slice(start, start + _CHUNK)
        diff = a[i[sl]] - b[j[sl]]
        out[sl] = np.sqrt(np.einsum("ij,ij->i", diff, diff))
    return out


def icd_set(points, *, pair_budget: int = DEFAULT_PAIR_BUDGET, seed: int = 0) -> DistanceSample:
    """All unordered within-class pair distances, sorted ascending.

    A class of N points yields N(N-1)/2 distances. Fewer than two points
    yield the empty sample, the degenerate-class signal consumers must check
    for.
    """
    pts = as_point_matrix(points)
    n = len(pts)
    if n < 2:
        return DistanceSample(np.empty(0, dtype=np.float64), total_pairs=0)
    total = n * (n - 1) // 2
    if total <= pair_budget:
        return DistanceSample(np.sort(pdist(pts)), total_pairs=total)
    rng = np.random.default_rng(seed)
    lin = rng.integers(0, total, size=pair_budget)
    i, j = _condensed_to_pair(lin, n)
    values = np.sort(_pair_distances(pts, pts, i, j))
    return DistanceSample(values, total_pairs=total, exact=False, subsample_seed=seed)


def bcd_set(
    points_a,
    points_b,
    *,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    seed: int = 0,
) -> DistanceSample:
    """All cross-class pair distances, sorted ascending; count = N_a * N_b."""
    a = as_point_matrix(points_a)
    b = as_point_matrix(points_b)
    if a.shape[1] != b.shape[1]:
        raise ValueError(f"dimension mismatch: {a.shape[1]} vs {b.shape[1]}")
    na, nb = len(a), len(b)
    total = na * nb
    if total <= pair_budget:
        return DistanceSample(np.sort(cdist(a, b).ravel()), total_pairs=total)
    rng = np.random.default_rng(seed)
    lin = rng.integers(0, total, size=pair_budget)
    i, j = lin // nb, lin % nb
    values = np.sort(_pair_distances(a, b, i, j))
    return DistanceSample(values, total_pairs=total, exact=False, subsample_seed=seed)


def class_complement_bcd(
    data,
    labels,
    class_id: int,
    *,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    seed: int = 0,
) -> DistanceSample:
    """BCD between one class and the union of all other classes."""
    pts = as_point_matrix(data)
    labels = np.asarray(labels)
    if labels.ndim != 1 or len(labels) != len(pts):
        raise ValueError(f"{labels.shape} labels for {len(pts)} points")
    if len(np.unique(labels)) < 2:
        raise ValueError("complement BCD needs at least two distinct classes")
    mask = labels == class_id
    if not mask.any():
        raise ValueError(f"class {class_id} not present in labels")
    return bcd_set(pts[mask], pts[~mask], pair_budget=pair_budget, seed=seed)
