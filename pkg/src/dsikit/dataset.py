"""Dataset loading, serialization, and seeded synthetic generators."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "LabeledDataset",
    "ParseError",
    "RING_RADII",
    "SYNTHETIC_SHAPES",
    "as_point_matrix",
    "canonicalize_labels",
    "generate_synthetic",
    "load_csv",
    "save_csv",
    "standardize",
]

SYNTHETIC_SHAPES = ("blobs", "rings", "spirals", "moons")

#: Ring radii produced by the ``rings`` generator (inner, outer).
RING_RADII = (1.0, 3.0)

#: Blob centers are spread on a circle of this radius.
BLOB_CENTER_RADIUS = 10.0

_DEFAULT_K = {"blobs": 3, "spirals": 3, "rings": 2, "moons": 2}
_FIXED_K = {"rings": 2, "moons": 2}


class ParseError(ValueError):
    """An input file could not be parsed."""


def as_point_matrix(points) -> np.ndarray:
    """Coerce to a finite (n, d) float64 matrix; 1-D input becomes a single feature."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
        raise ValueError(f"point matrix must be (n, d) with n, d >= 1, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise ValueError("point matrix contains NaN or infinite entries")
    return pts


def canonicalize_labels(labels) -> np.ndarray:
    """Map arbitrary label tokens to contiguous ids 0..k-1 in first-appearance order."""
    if isinstance(labels, np.ndarray) and labels.ndim != 1:
        raise ValueError("labels must be one-dimensional")
    out = np.empty(len(labels), dtype=np.int64)
    seen: dict = {}
    for i, lab in enumerate(labels):
        key = lab.item() if isinstance(lab, np.generic) else lab
        out[i] = seen.setdefault(key, len(seen))
    return out


@dataclass
class LabeledDataset:
    """A point matrix plus optional ground-truth class labels."""

    points: np.ndarray
    labels: np.ndarray | None = None
    name: str = ""

    def __post_init__(self):
        self.points = as_point_matrix(self.points)
        if self.labels is not None:
            labels = canonicalize_labels(self.labels)
            if len(labels) != len(self.points):
                raise ValueError(
                    f"{len(labels)} labels for {len(self.points)} points in {self.name!r}"
                )
            self.labels = labels

    @property
    def n_points(self) -> int:
        return self.points.shape[0]

    @property
    def n_features(self) -> int:
        return self.points.shape[1]

    @property
    def class_count(self) -> int:
        if self.labels is None:
            return 0
        return int(self.labels.max()) + 1


def _resolve_label_column(label_column, width: int):
    if label_column in (None, "none"):
        return None
    if label_column == "last":
        return width - 1
    col = int(label_column)
    if not 0 <= col < width:
        raise ParseError(f"label column {col} out of range for {width} columns")
    return col


def load_csv(
    path,
    *,
    has_header: bool = False,
    label_column="last",
    delimiter: str = ",",
    name: str | None = None,
) -> LabeledDataset:
    """Load a delimited text dataset.

    Parameters
    ----------
    path : file path
    has_header : skip one header row before the data rows.
    label_column : ``"last"`` (default), ``"none"``/``None`` for unlabeled data,
        or a 0-based column index. All remaining columns must be numeric.
    delimiter : single-character field separator.

    Returns a :class:`LabeledDataset`; ``labels`` is ``None`` when no label
    column is designated. Label tokens may be arbitrary strings and are
    canonicalized to contiguous ids by first appearance.
    """
    path = Path(path)
    rows: list[list[float]] = []
    label_tokens: list[str] = []
    width = None
    label_idx = None
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh, delimiter=delimiter)
        header_skipped = not has_header
        for record in reader:
            if not record or all(cell.strip() == "" for cell in record):
                continue
            if not header_skipped:
                header_skipped = True
                continue
            line = reader.line_num
            if width is None:
                width = len(record)
                label_idx = _resolve_label_column(label_column, width)
            elif len(record) != width:
                raise ParseError(
                    f"{path.name}: ragged row at line {line} "
                    f"({len(record)} fields, expected {width})"
                )
            feats = []
            for j, cell in enumerate(record):
                cell = cell.strip()
                if j == label_idx:
                    label_tokens.append(cell)
                    continue
                try:
                    feats.append(float(cell))
                except ValueError:
                    raise ParseError(
                        f"{path.name}: non-numeric value {cell!r} at line {line}, column {j}"
                    ) from None
            rows.append(feats)
    if not rows:
        raise ParseError(f"{path.name}: no data rows")
    if width is not None and label_idx is not None and width < 2:
        raise ParseError(f"{path.name}: label column leaves no feature columns")
    points = as_point_matrix(np.array(rows, dtype=np.float64))
    labels = canonicalize_labels(label_tokens) if label_idx is not None else None
    return LabeledDataset(points, labels, name=name if name is not None else path.stem)


def save_csv(dataset: LabeledDataset, path, *, delimiter: str = ",") -> None:
    """Write features (shortest round-trip float format) with labels as the last column."""
    path = Path(path)
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    for i, row in enumerate(dataset.points):
        cells = [repr(float(v)) for v in row]
        if dataset.labels is not None:
            cells.append(str(int(dataset.labels[i])))
        writer.writerow(cells)
    path.write_text(buf.getvalue(), encoding="utf-8")


def standardize(points: np.ndarray) -> np.ndarray:
    """Column-wise z-scoring; constant columns are centered but not scaled."""
    pts = as_point_matrix(points)
    mean = pts.mean(axis=0)
    std = pts.std(axis=0)
    std = np.where(std > 0.0, std, 1.0)
    return (pts - mean) / std


def _split_sizes(n: int, k: int) -> np.ndarray:
    sizes = np.full(k, n // k, dtype=np.int64)
    sizes[: n % k] += 1
    return sizes


def generate_synthetic(
    shape: str,
    n: int,
    k: int | None = None,
    noise: float = 0.0,
    seed: int = 0,
) -> LabeledDataset:
    """Generate a seeded 2-D labeled dataset.

    Shapes: ``blobs`` (k point masses on a circle of radius 10), ``rings``
    (two concentric circles, radii ``RING_RADII``), ``spirals`` (k
    interleaved arms), ``moons`` (two interleaved half circles). ``rings``
    and ``moons`` fix k = 2. ``noise`` is the standard deviation of an
    isotropic Gaussian displacement applied per coordinate. Identical
    arguments always produce bit-identical output.
    """
    if shape not in SYNTHETIC_SHAPES:
        raise ValueError(f"unknown shape {shape!r}; choose from {SYNTHETIC_SHAPES}")
    if noise < 0:
        raise ValueError("noise must be nonnegative")
    if k is None:
        k = _DEFAULT_K[shape]
    if shape in _FIXED_K and k != _FIXED_K[shape]:
        raise ValueError(f"shape {shape!r} fixes k = {_FIXED_K[shape]}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < k:
        raise ValueError(f"need n >= k, got n = {n}, k = {k}")

    rng = np.random.default_rng(seed)
    sizes = _split_sizes(n, k)
    labels = np.repeat(np.arange(k), sizes)
    parts = []
    if shape == "blobs":
        for j, m in enumerate(sizes):
            angle = 2.0 * np.pi * j / k
            center = BLOB_CENTER_RADIUS * np.array([np.cos(angle), np.sin(angle)])
            parts.append(np.tile(center, (m, 1)))
    elif shape == "rings":
        for radius, m in zip(RING_RADII, sizes):
            theta = 2.0 * np.pi * (np.arange(m) + 0.5) / m
            parts.append(radius * np.column_stack([np.cos(theta), np.sin(theta)]))
    elif shape == "spirals":
        for j, m in enumerate(sizes):
            t = (np.arange(m) + 1.0) / m
            radius = 0.5 + 2.5 * t
            theta = 3.0 * np.pi * t + 2.0 * np.pi * j / k
            parts.append(radius[:, None] * np.column_stack([np.cos(theta), np.sin(theta)]))
    else:  # moons
        m0, m1 = sizes
        t0 = np.pi * (np.arange(m0) + 0.5) / m0
        t1 = np.pi * (np.arange(m1) + 0.5) / m1
        parts.append(np.column_stack([np.cos(t0), np.sin(t0)]))
        parts.append(np.column_stack([1.0 - np.cos(t1), 0.5 - np.sin(t1)]))
    points = np.vstack(parts)
    if noise > 0:
        points = points + rng.normal(0.0, noise, size=points.shape)
    name = f"{shape}_n{n}_k{k}_noise{noise:g}_seed{seed}"
    return LabeledDataset(points, labels, name=name)
