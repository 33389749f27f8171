"""Candidate clustering generators: seeded k-means, Ward linkage, and
ingestion of label files produced by external tools."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np
from scipy.spatial.distance import cdist

from .dataset import ParseError, as_point_matrix, canonicalize_labels

__all__ = ["kmeans", "load_external_labels", "ward"]


def _kmeanspp_init(pts: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = len(pts)
    centers = np.empty((k, pts.shape[1]))
    centers[0] = pts[rng.integers(n)]
    d2 = ((pts - centers[0]) ** 2).sum(axis=1)
    for j in range(1, k):
        total = d2.sum()
        if total > 0.0:
            idx = rng.choice(n, p=d2 / total)
        else:
            idx = rng.integers(n)  # remaining points coincide with a center
        centers[j] = pts[idx]
        d2 = np.minimum(d2, ((pts - centers[j]) ** 2).sum(axis=1))
    return centers


def _fill_empty_clusters(assign: np.ndarray, d2_own: np.ndarray, k: int) -> np.ndarray:
    """Give each empty cluster the point currently farthest from its centroid."""
    sizes = np.bincount(assign, minlength=k)
    for cid in np.flatnonzero(sizes == 0):
        # never steal the last member of another cluster
        candidates = np.flatnonzero(sizes[assign] > 1)
        point = candidates[np.argmax(d2_own[candidates])]
        sizes[assign[point]] -= 1
        sizes[cid] += 1
        assign[point] = cid
        d2_own[point] = 0.0
    return assign


def kmeans(
    data,
    k: int,
    seed: int = 0,
    max_iter: int = 300,
    tol: float = 1e-6,
    inertia_history: list | None = None,
) -> np.ndarray:
    """Lloyd iteration with k-means++ seeding.

    Deterministic for fixed (data, k, seed). Stops when no centroid moves
    more than ``tol`` or after ``max_iter`` iterations. Empty clusters are
    repaired by reassigning the point farthest from its current centroid.
    Pass a list as ``inertia_history`` to record the within-cluster sum of
    squares after each iteration (it is non-increasing).

    Returns contiguous labels 0..k-1 with every cluster non-empty.
    """
    pts = as_point_matrix(data)
    n = len(pts)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k = {k}, n = {n}")
    rng = np.random.default_rng(seed)
    centers = _kmeanspp_init(pts, k, rng)
    assign = np.zeros(n, dtype=np.int64)
    for _ in range(max_iter):
        d2 = cdist(pts, centers, "sqeuclidean")
        assign = d2.argmin(axis=1)
        assign = _fill_empty_clusters(assign, d2[np.arange(n), assign], k)
        new_centers = np.zeros_like(centers)
        np.add.at(new_centers, assign, pts)
        new_centers /= np.bincount(assign, minlength=k)[:, None]
        shift = np.linalg.norm(new_centers - centers, axis=1).max()
        centers = new_centers
        if inertia_history is not None:
            inertia_history.append(float(((pts - centers[assign]) ** 2).sum()))
        if shift < tol:
            break
    return canonicalize_labels(assign)


def ward(data, k: int) -> np.ndarray:
    """Agglomerative clustering minimizing the Ward variance increase, cut at
    k clusters.

    Pair merge costs follow the Lance-Williams recurrence on squared
    Euclidean distances; exact ties are broken by the smallest
    (cluster-id, cluster-id) pair, where original points are clusters
    0..n-1 and the cluster created by merge step m gets id n + m.
    """
    pts = as_point_matrix(data)
    n = len(pts)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k = {k}, n = {n}")
    if k == n:
        return np.arange(n, dtype=np.int64)

    # cost[i, j] = 2 * (Ward SSE increase of merging clusters in slots i, j);
    # dead slots are parked at +inf so the global min only sees live pairs
    cost = cdist(pts, pts, "sqeuclidean")
    np.fill_diagonal(cost, math.inf)
    alive = np.ones(n, dtype=bool)
    sizes = np.ones(n, dtype=np.int64)
    ids = np.arange(n, dtype=np.int64)
    membership = np.arange(n, dtype=np.int64)  # point -> slot

    for step in range(n - k):
        best = cost.min()
        cand = np.argwhere(cost == best)
        cand = cand[cand[:, 0] < cand[:, 1]]
        pair_ids = np.sort(ids[cand], axis=1)
        order = np.lexsort((pair_ids[:, 1], pair_ids[:, 0]))
        p, q = cand[order[0]]

        others = alive.copy()
        others[[p, q]] = False
        sp, sq, sr = sizes[p], sizes[q], sizes[others]
        cost[p, others] = cost[others, p] = (
            (sr + sp) * cost[p, others] + (sr + sq) * cost[q, others] - sr * cost[p, q]
        ) / (sr + sp + sq)
        sizes[p] += sizes[q]
        alive[q] = False
        cost[q, :] = math.inf
        cost[:, q] = math.inf
        ids[p] = n + step
        membership[membership == q] = p

    return canonicalize_labels(membership)


def load_external_labels(path, n: int) -> np.ndarray:
    """Read one label token per line and canonicalize to contiguous ids.

    The file must contain exactly ``n`` non-blank single-token lines.
    """
    path = Path(path)
    tokens: list[str] = []
    for ln, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if len(stripped.split()) != 1:
            raise ParseError(f"{path.name}: expected one label per line, got {line!r} at line {ln}")
        tokens.append(stripped)
    if len(tokens) != n:
        raise ParseError(f"{path.name}: {len(tokens)} labels for {n} points")
    return canonicalize_labels(tokens)
