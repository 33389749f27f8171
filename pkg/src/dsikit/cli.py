"""Command-line surface: score a clustering, run the evaluation pipeline,
compare score matrices, and generate synthetic datasets.

Exit codes: 0 success, 2 I/O or parse errors (including bad arguments),
3 domain precondition violations.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .clustering import kmeans, load_external_labels, ward
from .dataset import (
    ParseError,
    SYNTHETIC_SHAPES,
    generate_synthetic,
    load_csv,
    save_csv,
    standardize,
)
from .evaluation import (
    PLANS,
    ScoreMatrix,
    ScoreRow,
    aggregate,
    compare_row,
    read_score_matrix,
    write_report_csv,
    write_report_json,
    write_score_matrix,
)
from .indices import adjusted_rand_index, lookup_index, native_scorers

DEFAULT_INDICES = "dsi,dunn,ch,db,silhouette,wb,i"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3


def _thread_setting(args) -> str:
    if getattr(args, "threads", None):
        return str(args.threads)
    return os.environ.get("DSIKIT_THREADS", "auto")


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _resolve_scorer(name: str):
    scorers = native_scorers()
    key = name.lower()
    if key in scorers:
        return key, scorers[key]
    if key in ("cvnn", "cvdd"):
        raise ValueError(
            f"{name}: index not implemented natively; supply via score-matrix file"
        )
    if key == "ari":
        raise ValueError("ARI is an external index; it is computed by the evaluate command")
    raise ValueError(f"unknown index {name!r}")


def _emit_rows(rows: list[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        import json

        out.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
        return
    keys = list(rows[0]) if rows else []
    out.write(",".join(keys) + "\n")
    for row in rows:
        out.write(",".join(str(row[k]) for k in keys) + "\n")


def _cmd_score(args) -> int:
    dataset = load_csv(
        args.data,
        has_header=args.has_header,
        label_column="last" if args.labels_from_data else "none",
        delimiter=args.delimiter,
    )
    points = standardize(dataset.points) if args.standardize else dataset.points
    if args.labels_from_data:
        labels = dataset.labels
    else:
        labels = load_external_labels(args.labels, len(points))
    rows = []
    for name in args.index.split(","):
        key, fn = _resolve_scorer(name.strip())
        desc = lookup_index(key)
        rows.append(
            {"index": desc.name, "direction": desc.direction, "score": repr(fn(points, labels))}
        )
    _emit_rows(rows, args.format)
    return EXIT_OK


def _cmd_compare(args) -> int:
    matrix = read_score_matrix(args.scores)
    truth = matrix.row(args.truth_row)
    rows = [
        {"index": row.name, "outcome": compare_row(row, truth, args.plan)}
        for row in matrix.rows
        if row.name.lower() != truth.name.lower()
    ]
    _emit_rows(rows, args.format)
    return EXIT_OK


def _dataset_paths(spec: str) -> list[Path]:
    paths: list[Path] = []
    for token in spec.split(","):
        p = Path(token.strip())
        if p.is_dir():
            paths.extend(sorted(p.glob("*.csv")))
        else:
            paths.append(p)
    if not paths:
        raise ParseError(f"no datasets found for {spec!r}")
    return paths


def _external_labels_for(source: str, dataset_path: Path, name: str, n: int) -> np.ndarray:
    src = Path(source)
    if src.is_dir():
        for suffix in (".labels", ".txt", ".csv"):
            candidate = src / (dataset_path.stem + suffix)
            if candidate.exists():
                return load_external_labels(candidate, n)
        raise ParseError(f"no external label file for dataset {name!r} under {src}")
    return load_external_labels(src, n)


def _predicted_labels(method: str, points, k: int, seed: int, dataset_path: Path, name: str):
    if method == "kmeans":
        return kmeans(points, k, seed=seed)
    if method == "ward":
        return ward(points, k)
    if method.startswith("external:"):
        return _external_labels_for(method[len("external:"):], dataset_path, name, len(points))
    raise ValueError(f"unknown clustering method {method!r}")


def _method_display(method: str) -> str:
    return "external" if method.startswith("external:") else method


def _cmd_evaluate(args) -> int:
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if len(methods) < 2:
        raise ValueError("need at least two clustering methods to compare")
    index_keys = [i.strip().lower() for i in args.indices.split(",") if i.strip()]
    scorers = dict(_resolve_scorer(k) for k in index_keys)
    index_names = [lookup_index(k).name for k in scorers]

    outcomes: list[list[int]] = []
    used_names: list[str] = []
    skipped: list[tuple[str, str]] = []
    hashes: dict[str, str] = {}
    for path in _dataset_paths(args.datasets):
        dataset = load_csv(path, has_header=args.has_header, label_column="last")
        hashes[dataset.name] = _sha256(path)
        if dataset.class_count < 2:
            print(f"warning: skipping {dataset.name!r}: fewer than two truth classes", file=sys.stderr)
            skipped.append((dataset.name, "fewer than two truth classes"))
            continue
        points = standardize(dataset.points) if args.standardize else dataset.points
        k = dataset.class_count if args.k == "truth" else int(args.k)
        method_labels = {
            m: _predicted_labels(m, points, k, args.seed, path, dataset.name) for m in methods
        }
        display = tuple(_method_display(m) for m in methods)
        rows = [
            ScoreRow(
                "ARI",
                lookup_index("ari").direction,
                display,
                [adjusted_rand_index(dataset.labels, method_labels[m]) for m in methods],
            )
        ]
        for key, fn in scorers.items():
            scores = []
            for m in methods:
                try:
                    scores.append(fn(points, method_labels[m]))
                except ValueError:
                    scores.append(float("nan"))  # degenerate clustering for this index
            rows.append(ScoreRow(lookup_index(key).name, lookup_index(key).direction, display, scores))
        matrix = ScoreMatrix(display, rows)
        write_score_matrix(matrix, out_dir / f"{dataset.name}_scores.csv")
        truth_row = matrix.row("ARI")
        outcomes.append([compare_row(matrix.row(n), truth_row, args.plan) for n in index_names])
        used_names.append(dataset.name)

    if not outcomes:
        raise ValueError("no datasets with usable truth labels")
    report = aggregate(outcomes, args.plan, used_names, index_names, skipped=skipped)
    if args.format == "json":
        provenance = {
            "toolkit_version": __version__,
            "seed": args.seed,
            "threads": _thread_setting(args),
            "inputs": hashes,
        }
        write_report_json(report, out_dir / "report.json", provenance=provenance)
    else:
        write_report_csv(report, out_dir / "report.csv")
    return EXIT_OK


def _cmd_synth(args) -> int:
    dataset = generate_synthetic(args.shape, args.n, k=args.k, noise=args.noise, seed=args.seed)
    save_csv(dataset, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsikit",
        description="Distance-based separability index and cluster-validity evaluation toolkit",
    )
    parser.add_argument("--version", action="version", version=f"dsikit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", "-j", type=int, default=None,
                        help="thread-count hint (DSIKIT_THREADS); results never depend on it")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("score", parents=[common], help="score one clustering with chosen indices")
    p.add_argument("--data", required=True, help="feature CSV")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--labels", help="label file, one token per line")
    group.add_argument("--labels-from-data", action="store_true",
                       help="use the data file's last column as labels")
    p.add_argument("--index", default="dsi", help="comma-separated index names")
    p.add_argument("--has-header", action="store_true")
    p.add_argument("--delimiter", default=",")
    p.add_argument("--standardize", action="store_true", help="z-score features first")
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("evaluate", parents=[common],
                       help="cluster labeled datasets, score with indices, compare against ARI")
    p.add_argument("--datasets", required=True,
                   help="directory or comma-separated CSV files (truth labels in last column)")
    p.add_argument("--methods", default="kmeans,ward",
                   help="comma-separated: kmeans, ward, external:PATH")
    p.add_argument("--indices", default=DEFAULT_INDICES)
    p.add_argument("--plan", choices=PLANS, default="rankdiff")
    p.add_argument("--k", default="truth", help='"truth" or a fixed integer cluster count')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--has-header", action="store_true")
    p.add_argument("--standardize", action="store_true")
    p.add_argument("--output", "-o", required=True, help="output directory")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("compare", parents=[common],
                       help="compare score-matrix rows against a ground-truth row")
    p.add_argument("--scores", required=True, help="score-matrix CSV")
    p.add_argument("--truth-row", default="ARI")
    p.add_argument("--plan", choices=PLANS, required=True)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("synth", parents=[common], help="generate a synthetic labeled dataset")
    p.add_argument("--shape", choices=SYNTHETIC_SHAPES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=_cmd_synth)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
