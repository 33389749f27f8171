import json

import numpy as np
import pytest

from dsikit.cli import main
from dsikit.dataset import generate_synthetic, save_csv


def make_dataset_dir(tmp_path, specs):
    ds_dir = tmp_path / "datasets"
    ds_dir.mkdir()
    for shape, n, k, noise, seed in specs:
        ds = generate_synthetic(shape, n, k=k, noise=noise, seed=seed)
        save_csv(ds, ds_dir / f"{ds.name}.csv")
    return ds_dir


class TestScoreCommand:
    def test_scores_from_data_labels(self, tmp_path, capsys):
        ds = generate_synthetic("blobs", 40, k=2, noise=0.5, seed=0)
        path = tmp_path / "blobs.csv"
        save_csv(ds, path)
        code = main(["score", "--data", str(path), "--labels-from-data",
                     "--index", "dsi,dunn,db"])
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "index,direction,score"
        assert len(lines) == 4
        assert lines[1].startswith("DSI,max,")
        assert lines[3].startswith("DB,min,")

    def test_separate_label_file(self, tmp_path, capsys):
        ds = generate_synthetic("blobs", 10, k=2, noise=0.3, seed=1)
        data_path = tmp_path / "d.csv"
        save_csv(generate_synthetic("blobs", 10, k=2, noise=0.3, seed=1), data_path)
        # strip the label column so --labels is the only source
        stripped = tmp_path / "points.csv"
        stripped.write_text(
            "\n".join(",".join(line.split(",")[:-1]) for line in data_path.read_text().splitlines())
            + "\n"
        )
        label_path = tmp_path / "labels.txt"
        label_path.write_text("".join(f"{v}\n" for v in ds.labels))
        code = main(["score", "--data", str(stripped), "--labels", str(label_path),
                     "--index", "silhouette", "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload[0]["index"] == "Silhouette"

    def test_unknown_index_exits_3(self, tmp_path, capsys):
        path = tmp_path / "d.csv"
        save_csv(generate_synthetic("blobs", 10, k=2, noise=0.5, seed=0), path)
        assert main(["score", "--data", str(path), "--labels-from-data", "--index", "bogus"]) == 3

    def test_non_native_index_points_to_score_matrix(self, tmp_path, capsys):
        path = tmp_path / "d.csv"
        save_csv(generate_synthetic("blobs", 10, k=2, noise=0.5, seed=0), path)
        code = main(["score", "--data", str(path), "--labels-from-data", "--index", "cvdd"])
        assert code == 3
        assert "supply via score-matrix file" in capsys.readouterr().err

    def test_single_cluster_labels_exit_3(self, tmp_path, capsys):
        path = tmp_path / "d.csv"
        path.write_text("0,0,a\n0,1,a\n1,0,a\n")
        code = main(["score", "--data", str(path), "--labels-from-data", "--index", "dsi"])
        assert code == 3
        assert "no BCD exists" in capsys.readouterr().err

    def test_missing_file_exits_2(self):
        assert main(["score", "--data", "/nonexistent.csv", "--labels-from-data"]) == 2


class TestCompareCommand:
    def test_wine_rankdiff(self, wine_scores_path, capsys):
        code = main(["compare", "--scores", str(wine_scores_path),
                     "--truth-row", "ARI", "--plan", "rankdiff"])
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        outcomes = dict(line.split(",") for line in lines[1:])
        assert outcomes == {
            "Dunn": "9", "CH": "1", "DB": "3", "Silhouette": "0", "WB": "1",
            "I": "0", "CVNN": "0", "CVDD": "7", "DSI": "0",
        }

    def test_wine_hits(self, wine_scores_path, capsys):
        code = main(["compare", "--scores", str(wine_scores_path),
                     "--truth-row", "ARI", "--plan", "hit"])
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        outcomes = dict(line.split(",") for line in lines[1:])
        assert outcomes == {
            "Dunn": "1", "CH": "0", "DB": "1", "Silhouette": "0", "WB": "1",
            "I": "1", "CVNN": "1", "CVDD": "0", "DSI": "1",
        }

    def test_truth_row_against_itself_is_zero(self, wine_scores_path, capsys):
        main(["compare", "--scores", str(wine_scores_path), "--truth-row", "Dunn",
              "--plan", "rankdiff"])
        out = capsys.readouterr().out
        assert "Dunn" not in out  # truth row excluded from its own report

    def test_missing_truth_row_exits_3(self, wine_scores_path):
        assert main(["compare", "--scores", str(wine_scores_path),
                     "--truth-row", "nope", "--plan", "hit"]) == 3

    def test_malformed_matrix_exits_2(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("index,direction,a,b\nDunn,max,1\n")
        assert main(["compare", "--scores", str(bad), "--plan", "hit"]) == 2


class TestSynthCommand:
    def test_writes_dataset(self, tmp_path):
        out = tmp_path / "b.csv"
        assert main(["synth", "--shape", "blobs", "--n", "100", "--k", "2",
                     "--noise", "0.5", "--seed", "7", "-o", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 100
        assert lines[0].count(",") == 2  # x, y, label

    def test_invalid_shape_exits_2(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["synth", "--shape", "torus", "--n", "10", "-o", str(tmp_path / "t.csv")])
        assert exc.value.code == 2

    def test_n_below_k_exits_3(self, tmp_path):
        assert main(["synth", "--shape", "blobs", "--n", "2", "--k", "5",
                     "-o", str(tmp_path / "t.csv")]) == 3

    def test_rings_then_dsi_above_half(self, tmp_path, capsys):
        out = tmp_path / "rings.csv"
        main(["synth", "--shape", "rings", "--n", "200", "--seed", "1", "-o", str(out)])
        main(["score", "--data", str(out), "--labels-from-data", "--index", "dsi"])
        lines = capsys.readouterr().out.strip().splitlines()
        assert float(lines[-1].split(",")[2]) > 0.5


class TestEvaluateCommand:
    def test_small_run_with_report(self, tmp_path, capsys):
        ds_dir = make_dataset_dir(
            tmp_path,
            [("blobs", 40, 2, 0.8, 0), ("moons", 40, None, 0.1, 1), ("rings", 40, None, 0.1, 2)],
        )
        out_dir = tmp_path / "out"
        code = main(["evaluate", "--datasets", str(ds_dir), "--plan", "hit",
                     "--seed", "3", "-o", str(out_dir)])
        assert code == 0
        report = (out_dir / "report.csv").read_text().splitlines()
        assert report[0].startswith("dataset,DSI,Dunn,CH,DB,Silhouette,WB,I")
        assert len(report) == 5  # header + 3 datasets + footer
        assert report[-1].startswith("Total (rank),")
        assert len(list(out_dir.glob("*_scores.csv"))) == 3

    def test_reruns_byte_identical(self, tmp_path):
        ds_dir = make_dataset_dir(tmp_path, [("blobs", 30, 3, 1.0, 4), ("spirals", 30, 2, 0.05, 5)])
        outs = []
        for tag in ("a", "b"):
            out_dir = tmp_path / tag
            assert main(["evaluate", "--datasets", str(ds_dir), "--plan", "rankdiff",
                         "--seed", "11", "--format", "json", "-o", str(out_dir)]) == 0
            outs.append(out_dir)
        files_a = sorted(p.name for p in outs[0].iterdir())
        files_b = sorted(p.name for p in outs[1].iterdir())
        assert files_a == files_b
        for name in files_a:
            assert (outs[0] / name).read_bytes() == (outs[1] / name).read_bytes()

    def test_single_class_dataset_skipped_and_listed(self, tmp_path, capsys):
        ds_dir = make_dataset_dir(tmp_path, [("blobs", 30, 2, 0.5, 0)])
        flat = ds_dir / "flat.csv"
        flat.write_text("".join(f"{i},{i},same\n" for i in range(10)))
        out_dir = tmp_path / "out"
        code = main(["evaluate", "--datasets", str(ds_dir), "--plan", "hit", "-o", str(out_dir)])
        assert code == 0
        assert "skipping 'flat'" in capsys.readouterr().err
        report = (out_dir / "report.csv").read_text()
        assert "skipped:flat" in report

    def test_external_method_from_file(self, tmp_path):
        ds = generate_synthetic("blobs", 24, k=2, noise=0.6, seed=9)
        ds_path = tmp_path / "blobs.csv"
        save_csv(ds, ds_path)
        labels_path = tmp_path / "external.labels"
        labels_path.write_text("".join(f"{v}\n" for v in ds.labels))
        out_dir = tmp_path / "out"
        code = main(["evaluate", "--datasets", str(ds_path),
                     "--methods", f"kmeans,ward,external:{labels_path}",
                     "--plan", "rankdiff", "-o", str(out_dir)])
        assert code == 0
        scores = (out_dir / "blobs_scores.csv").read_text().splitlines()
        assert scores[0] == "index,direction,kmeans,ward,external"

    def test_fixed_k_override(self, tmp_path):
        ds_dir = make_dataset_dir(tmp_path, [("blobs", 30, 3, 0.8, 2)])
        out_dir = tmp_path / "out"
        assert main(["evaluate", "--datasets", str(ds_dir), "--k", "2",
                     "--plan", "hit", "-o", str(out_dir)]) == 0

    def test_json_report_carries_provenance(self, tmp_path):
        ds_dir = make_dataset_dir(tmp_path, [("blobs", 30, 2, 0.5, 6)])
        out_dir = tmp_path / "out"
        main(["evaluate", "--datasets", str(ds_dir), "--plan", "hit", "--seed", "5",
              "--format", "json", "-o", str(out_dir)])
        payload = json.loads((out_dir / "report.json").read_text())
        prov = payload["provenance"]
        assert prov["seed"] == 5
        assert prov["toolkit_version"]
        assert all(len(h) == 64 for h in prov["inputs"].values())


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
