"""Baseline internal cluster validity indices, the external ARI, and
per-index optimal-direction metadata.

All internal indices share the signature ``(data, labels) -> float`` and
require at least two non-empty clusters. Degenerate divisions (zero scatter,
coincident centroids, ...) return an infinite sentinel instead of raising, so
a scoring harness can rank whatever arrives; the sentinel is detectable with
``math.isinf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from .dataset import as_point_matrix, canonicalize_labels
from .separability import dsi

__all__ = [
    "INDEX_TABLE",
    "MAX_OPTIMAL",
    "MIN_OPTIMAL",
    "ClusterSummary",
    "IndexDescriptor",
    "adjusted_rand_index",
    "calinski_harabasz",
    "cluster_summary",
    "davies_bouldin",
    "dunn",
    "i_index",
    "lookup_index",
    "native_scorers",
    "silhouette",
    "wb_index",
]

MAX_OPTIMAL = "max"
MIN_OPTIMAL = "min"

#: Exponent of the I index; the standard choice from its original definition.
I_INDEX_POWER = 2


@dataclass(frozen=True)
class IndexDescriptor:
    name: str
    direction: str  # MAX_OPTIMAL or MIN_OPTIMAL
    kind: str = "internal"


#: Every index the evaluation harness knows about. CVNN and CVDD have no
#: native implementation here; their descriptors exist so externally computed
#: score rows can flow through the comparison engine.
INDEX_TABLE: dict[str, IndexDescriptor] = {
    d.name.lower(): d
    for d in (
        IndexDescriptor("Dunn", MAX_OPTIMAL),
        IndexDescriptor("CH", MAX_OPTIMAL),
        IndexDescriptor("DB", MIN_OPTIMAL),
        IndexDescriptor("Silhouette", MAX_OPTIMAL),
        IndexDescriptor("I", MAX_OPTIMAL),
        IndexDescriptor("WB", MIN_OPTIMAL),
        IndexDescriptor("CVNN", MIN_OPTIMAL),
        IndexDescriptor("CVDD", MAX_OPTIMAL),
        IndexDescriptor("DSI", MAX_OPTIMAL),
        IndexDescriptor("ARI", MAX_OPTIMAL, kind="external"),
    )
}


def lookup_index(name: str) -> IndexDescriptor:
    try:
        return INDEX_TABLE[name.lower()]
    except KeyError:
        raise ValueError(f"unknown index {name!r}") from None


@dataclass
class ClusterSummary:
    """Per-cluster centroids, sizes, and mean member-to-centroid distances."""

    centroids: np.ndarray  # (k, d)
    sizes: np.ndarray  # (k,)
    scatter: np.ndarray  # (k,) mean Euclidean distance of members to centroid
    global_centroid: np.ndarray  # (d,)


def _validated(data, labels) -> tuple[np.ndarray, np.ndarray, int]:
    pts = as_point_matrix(data)
    labels = canonicalize_labels(labels)
    if len(labels) != len(pts):
        raise ValueError(f"{len(labels)} labels for {len(pts)} points")
    k = int(labels.max()) + 1
    if k < 2:
        raise ValueError("at least two clusters required")
    return pts, labels, k


def cluster_summary(data, labels) -> ClusterSummary:
    pts, labels, k = _validated(data, labels)
    d = pts.shape[1]
    sizes = np.bincount(labels, minlength=k)
    centroids = np.zeros((k, d))
    np.add.at(centroids, labels, pts)
    centroids /= sizes[:, None]
    member_dist = np.linalg.norm(pts - centroids[labels], axis=1)
    scatter = np.bincount(labels, weights=member_dist, minlength=k) / sizes
    return ClusterSummary(centroids, sizes, scatter, pts.mean(axis=0))


def dunn(data, labels) -> float:
    """Minimum single-linkage inter-cluster distance over maximum cluster
    diameter (complete diameter). Returns +inf when every cluster is a
    singleton (all diameters are zero)."""
    pts, labels, _ = _validated(data, labels)
    dist = cdist(pts, pts)
    same = labels[:, None] == labels[None, :]
    off_diag = ~np.eye(len(pts), dtype=bool)
    min_inter = dist[~same].min()
    intra = dist[same & off_diag]
    max_diameter = intra.max() if intra.size else 0.0
    if max_diameter == 0.0:
        return math.inf
    return float(min_inter / max_diameter)


def calinski_harabasz(data, labels) -> float:
    """Between-cluster over within-cluster variance ratio, each scaled by its
    degrees of freedom. +inf when the within term is zero (n == k or perfectly
    compact clusters)."""
    pts, labels, k = _validated(data, labels)
    n = len(pts)
    summ = cluster_summary(pts, labels)
    ssb = float(summ.sizes @ ((summ.centroids - summ.global_centroid) ** 2).sum(axis=1))
    ssw = float(((pts - summ.centroids[labels]) ** 2).sum())
    if n == k or ssw == 0.0:
        return math.inf
    return (ssb / (k - 1)) / (ssw / (n - k))


def davies_bouldin(data, labels) -> float:
    """Mean over clusters of the worst (scatter_i + scatter_j) / centroid-gap
    ratio; scatter is the mean member-to-centroid distance. Coincident
    centroids give +inf."""
    pts, labels, k = _validated(data, labels)
    summ = cluster_summary(pts, labels)
    gaps = cdist(summ.centroids, summ.centroids)
    pair_scatter = summ.scatter[:, None] + summ.scatter[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratios = pair_scatter / gaps
    ratios[(gaps == 0.0)] = math.inf  # includes 0/0 between identical centroids
    np.fill_diagonal(ratios, -math.inf)
    return float(ratios.max(axis=1).mean())


def silhouette(data, labels) -> float:
    """Mean silhouette width, in [-1, 1]; singleton-cluster points count 0."""
    pts, labels, k = _validated(data, labels)
    n = len(pts)
    dist = cdist(pts, pts)
    sizes = np.bincount(labels, minlength=k)
    sums = np.zeros((n, k))
    for c in range(k):
        sums[:, c] = dist[:, labels == c].sum(axis=1)
    idx = np.arange(n)
    own_size = sizes[labels]
    with np.errstate(divide="ignore", invalid="ignore"):
        a = sums[idx, labels] / (own_size - 1)
        mean_other = sums / sizes[None, :]
    mean_other[idx, labels] = math.inf
    b = mean_other.min(axis=1)
    with np.errstate(invalid="ignore"):
        s = (b - a) / np.maximum(a, b)
    s[own_size == 1] = 0.0
    s[np.maximum(a, b) == 0.0] = 0.0  # identical coincident clusters: a == b == 0
    return float(s.mean())


def wb_index(data, labels) -> float:
    """k times the within over between sum-of-squares ratio; +inf when all
    centroids coincide."""
    pts, labels, k = _validated(data, labels)
    summ = cluster_summary(pts, labels)
    ssb = float(summ.sizes @ ((summ.centroids - summ.global_centroid) ** 2).sum(axis=1))
    ssw = float(((pts - summ.centroids[labels]) ** 2).sum())
    if ssb == 0.0:
        return math.inf
    return k * ssw / ssb


def i_index(data, labels) -> float:
    """((1/k) * (E1/Ek) * Dk) ** 2 with E1 the total distance to the global
    centroid, Ek the total distance to cluster centroids, and Dk the largest
    centroid separation. +inf when Ek is zero."""
    pts, labels, k = _validated(data, labels)
    summ = cluster_summary(pts, labels)
    e1 = float(np.linalg.norm(pts - summ.global_centroid, axis=1).sum())
    ek = float(np.linalg.norm(pts - summ.centroids[labels], axis=1).sum())
    dk = float(cdist(summ.centroids, summ.centroids).max())
    if ek == 0.0:
        return math.inf
    return ((e1 / ek) * dk / k) ** I_INDEX_POWER


def adjusted_rand_index(truth, predicted) -> float:
    """Chance-corrected pair-counting agreement between two partitions.

    Invariant to label renaming on either side; 1 for identical partitions,
    around 0 for random assignments, and can be negative. Exact integer pair
    counting, so large partitions do not lose precision.
    """
    t = canonicalize_labels(truth)
    p = canonicalize_labels(predicted)
    if len(t) != len(p):
        raise ValueError(f"length mismatch: {len(t)} vs {len(p)}")
    n = len(t)
    if n < 2:
        raise ValueError("ARI needs at least two points")
    kt = int(t.max()) + 1
    kp = int(p.max()) + 1
    table = np.zeros((kt, kp), dtype=np.int64)
    np.add.at(table, (t, p), 1)

    def comb2(x) -> int:
        x = int(x)
        return x * (x - 1) // 2

    sum_cells = sum(comb2(v) for v in table.ravel())
    sum_rows = sum(comb2(v) for v in table.sum(axis=1))
    sum_cols = sum(comb2(v) for v in table.sum(axis=0))
    total = comb2(n)
    expected = sum_rows * sum_cols / total
    denom = (sum_rows + sum_cols) / 2 - expected
    if denom == 0:
        # both partitions induce the same trivial pair structure
        return 1.0
    return float((sum_cells - expected) / denom)


def _dsi_score(data, labels) -> float:
    return dsi(data, labels).value


def native_scorers() -> dict[str, callable]:
    """Internal indices computable natively, keyed by lower-case name."""
    return {
        "dunn": dunn,
        "ch": calinski_harabasz,
        "db": davies_bouldin,
        "silhouette": silhouette,
        "wb": wb_index,
        "i": i_index,
        "dsi": _dsi_score,
    }
