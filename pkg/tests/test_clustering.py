import itertools

import numpy as np
import pytest
from scipy.cluster.hierarchy import fcluster, linkage

from dsikit.clustering import kmeans, load_external_labels, ward
from dsikit.dataset import ParseError
from dsikit.indices import adjusted_rand_index

TWO_SEGMENTS = np.array([[0.0, 0.0], [0.0, 1.0], [50.0, 0.0], [50.0, 1.0]])


def inertia(data, labels):
    total = 0.0
    for cid in np.unique(labels):
        members = data[labels == cid]
        total += ((members - members.mean(axis=0)) ** 2).sum()
    return total


def partitions_into_two(n):
    for bits in itertools.product([0, 1], repeat=n - 1):
        labels = np.array([0, *bits])
        if labels.max() == 1:
            yield labels


class TestKmeans:
    def test_two_segments_found_for_every_seed(self):
        best = min(partitions_into_two(4), key=lambda lab: inertia(TWO_SEGMENTS, lab))
        assert best.tolist() == [0, 0, 1, 1]  # enumeration confirms the target
        for seed in range(20):
            labels = kmeans(TWO_SEGMENTS, 2, seed=seed)
            assert adjusted_rand_index(best, labels) == 1.0

    def test_k_equals_n(self):
        rng = np.random.default_rng(0)
        data = rng.normal(size=(6, 2))
        labels = kmeans(data, 6, seed=1)
        assert sorted(labels.tolist()) == list(range(6))
        assert inertia(data, labels) == 0.0

    def test_deterministic_per_seed(self):
        data = np.random.default_rng(1).normal(size=(60, 3))
        assert np.array_equal(kmeans(data, 4, seed=3), kmeans(data, 4, seed=3))

    def test_invalid_k(self):
        data = np.zeros((3, 2))
        with pytest.raises(ValueError, match="1 <= k <= n"):
            kmeans(data, 4)
        with pytest.raises(ValueError, match="1 <= k <= n"):
            kmeans(data, 0)

    def test_inertia_non_increasing(self):
        data = np.random.default_rng(2).normal(size=(200, 2))
        history = []
        kmeans(data, 5, seed=0, inertia_history=history)
        assert len(history) >= 1
        assert all(a >= b - 1e-9 for a, b in zip(history, history[1:]))

    @pytest.mark.parametrize("seed", range(5))
    def test_labels_contiguous_all_clusters_nonempty(self, seed):
        rng = np.random.default_rng(seed)
        data = rng.normal(size=(30, 2))
        labels = kmeans(data, 7, seed=seed)
        counts = np.bincount(labels, minlength=7)
        assert counts.min() >= 1
        assert labels.max() == 6

    def test_duplicate_points_still_fill_every_cluster(self):
        data = np.array([[0.0, 0.0]] * 3 + [[5.0, 5.0]] * 2 + [[9.0, 0.0]])
        labels = kmeans(data, 4, seed=0)
        assert np.bincount(labels, minlength=4).min() >= 1


class TestWard:
    def test_two_far_pairs(self):
        # enumeration: the two pairs minimize total within-cluster SSE
        best = min(partitions_into_two(4), key=lambda lab: inertia(TWO_SEGMENTS, lab))
        assert best.tolist() == [0, 0, 1, 1]
        assert ward(TWO_SEGMENTS, 2).tolist() == [0, 0, 1, 1]

    def test_k_equals_n_identity(self):
        data = np.random.default_rng(3).normal(size=(5, 2))
        assert ward(data, 5).tolist() == [0, 1, 2, 3, 4]

    def test_k_one_single_cluster(self):
        data = np.random.default_rng(4).normal(size=(8, 2))
        assert ward(data, 1).tolist() == [0] * 8

    def test_invalid_k(self):
        with pytest.raises(ValueError, match="1 <= k <= n"):
            ward(np.zeros((3, 2)), 4)

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_scipy_ward(self, seed):
        data = np.random.default_rng(seed).normal(size=(40, 3))
        ours = ward(data, 4)
        theirs = fcluster(linkage(data, method="ward"), 4, criterion="maxclust")
        assert adjusted_rand_index(ours, theirs) == 1.0

    @pytest.mark.parametrize("seed", range(3))
    def test_row_permutation_invariance(self, seed):
        rng = np.random.default_rng(seed)
        data = rng.normal(size=(30, 2))
        perm = rng.permutation(30)
        base = ward(data, 3)
        permuted = ward(data[perm], 3)
        assert adjusted_rand_index(base[perm], permuted) == 1.0

    def test_deterministic(self):
        data = np.random.default_rng(6).normal(size=(25, 2))
        assert np.array_equal(ward(data, 3), ward(data, 3))


class TestLoadExternalLabels:
    def test_integer_rows(self, tmp_path):
        path = tmp_path / "labels.txt"
        path.write_text("0\n0\n1\n")
        assert load_external_labels(path, 3).tolist() == [0, 0, 1]

    def test_length_mismatch(self, tmp_path):
        path = tmp_path / "labels.txt"
        path.write_text("0\n1\n")
        with pytest.raises(ParseError, match="2 labels for 3 points"):
            load_external_labels(path, 3)

    def test_token_canonicalization(self, tmp_path):
        path = tmp_path / "labels.txt"
        path.write_text("B\nB\nA\n")
        assert load_external_labels(path, 3).tolist() == [0, 0, 1]

    def test_multi_token_line_rejected(self, tmp_path):
        path = tmp_path / "labels.txt"
        path.write_text("0 1\n0\n1\n")
        with pytest.raises(ParseError, match="one label per line"):
            load_external_labels(path, 3)

    def test_blank_lines_skipped(self, tmp_path):
        path = tmp_path / "labels.txt"
        path.write_text("0\n\n1\n\n")
        assert load_external_labels(path, 2).tolist() == [0, 1]
