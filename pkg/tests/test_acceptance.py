"""Acceptance suite: one test per release criterion, each printing a
PASS line on success (run with -v or -s for per-criterion lines)."""

import os
import time
from functools import lru_cache

import numpy as np
import pytest

from itdendro.data import Dataset, dissimilarity, load_categorical
from itdendro.dendro import merge_table_fast, merge_table_from_edges, mst, slhc
from itdendro.intree import (
    build_it,
    check_it_structure,
    compute_potentials,
    it_to_sparse_edges,
)
from itdendro.partition import cut_threshold, evaluate, suggest_thresholds
from itdendro.synth import elongated_pair, gaussian_clusters_32d, two_moons

from test_dendro import _components, _edge_view, partition_sequence
from test_partition import as_partition, kept_edges


def report(line):
    print(f"ACCEPTANCE PASS: {line}")


@lru_cache(maxsize=1)
def validity_suite():
    """200 seeded random datasets with their in-trees; built once, checked twice."""
    out = []
    rng = np.random.default_rng(20240917)
    start = time.monotonic()
    for _ in range(200):
        n = int(rng.integers(1, 301))
        d = int(rng.integers(1, 9))
        sigma = float(rng.uniform(0.1, 10.0))
        data = Dataset(instances=rng.uniform(0, 10, (n, d)), kind="real")
        view = dissimilarity(data, "euclidean")
        it = build_it(view, compute_potentials(view, sigma))
        out.append((view, it))
    return out, time.monotonic() - start


@lru_cache(maxsize=1)
def oracle_suite():
    """50 seeded random datasets (n <= 200) for the equivalence criteria."""
    out = []
    rng = np.random.default_rng(77)
    for _ in range(50):
        n = int(rng.integers(2, 201))
        d = int(rng.integers(1, 9))
        data = Dataset(instances=rng.uniform(0, 10, (n, d)), kind="real")
        view = dissimilarity(data, "euclidean")
        it = build_it(view, compute_potentials(view, 1.5))
        out.append((view, it))
    return out


def test_intree_validity_suite():
    suite, build_elapsed = validity_suite()
    start = time.monotonic()
    for view, it in suite:
        assert np.isfinite(it.potential).all()
        check_it_structure(it, view)
    elapsed = build_elapsed + (time.monotonic() - start)
    assert elapsed < 30.0, f"validity suite took {elapsed:.1f}s"
    report(f"in-tree validity on 200 random datasets ({elapsed:.1f}s < 30s)")


def test_heights_identity():
    suite, _ = validity_suite()
    for _, it in suite:
        z = merge_table_fast(it)
        expected = sorted(float(it.weight[i]) for i in range(it.n) if i != it.root)
        assert z.heights == expected  # exact equality
    report("merge heights equal sorted non-root edge weights, exactly, on all 200")


def test_fast_path_against_naive_single_link():
    for view, it in oracle_suite():
        fast = merge_table_fast(it)
        naive = slhc(it_to_sparse_edges(it))
        assert fast.heights == naive.heights
        assert partition_sequence(fast) == partition_sequence(naive)
    report("fast path matches naive single-link on the tree edges, 50 datasets")


def test_full_single_link_matches_mst_route():
    rng = np.random.default_rng(424242)
    for k in range(50):
        n = int(rng.integers(2, 161))
        d = int(rng.integers(1, 9))
        pts = rng.uniform(0, 10, (n, d))
        pts = pts + rng.uniform(-1e-7, 1e-7, pts.shape)  # all-distinct distances
        view = dissimilarity(Dataset(instances=pts, kind="real"), "euclidean")
        direct = slhc(view)
        via_mst = merge_table_from_edges(mst(view))
        assert direct.heights == via_mst.heights
        assert partition_sequence(direct) == partition_sequence(via_mst)
    report("single-link on the full view matches the MST route, 50 jittered datasets")


def test_mst_of_tree_is_the_tree():
    for _, it in oracle_suite():
        edges = it_to_sparse_edges(it)
        assert mst(_edge_view(edges)).canonical() == edges.canonical()
    report("MST restricted to the undirected in-tree returns it exactly, 50 datasets")


def test_cut_matches_component_oracle():
    rng = np.random.default_rng(5150)
    for view, it in oracle_suite():
        w_max = float(it.weight.max())
        for tau in rng.uniform(0.0, w_max * 1.1 or 1.0, size=20):
            a = cut_threshold(it, float(tau))
            assert as_partition(a) == _components(it.n, kept_edges(it, tau))
            assert a.cluster_count == len(a.removed_edges) + 1
    report("threshold cuts equal the connected-component oracle, 20 taus x 50 datasets")


def test_d32_analog():
    start = time.monotonic()
    data = gaussian_clusters_32d(seed=0)
    assert data.n == 1024 and data.d == 32
    view = dissimilarity(data, "euclidean")
    it = build_it(view, compute_potentials(view, sigma=1.0))
    candidates = suggest_thresholds(merge_table_fast(it))
    ev = evaluate(cut_threshold(it, candidates[0][0]), data.labels)
    elapsed = time.monotonic() - start
    assert ev.cluster_count == 16
    assert ev.error_count == 0
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    report(f"32-d analog: 16 clusters, 0 errors at the top suggested cut ({elapsed:.1f}s)")


MUSHROOM_PATH = os.environ.get(
    "ITDENDRO_MUSHROOM",
    os.path.join(os.path.dirname(__file__), "..", "data", "agaricus-lepiota.data"),
)


@pytest.mark.skipif(not os.path.exists(MUSHROOM_PATH),
                    reason="mushroom dataset not downloaded; see scripts/fetch_datasets.py")
def test_mushroom():
    data = load_categorical(MUSHROOM_PATH, label_column=0)
    assert data.n == 8124 and data.d == 22
    view = dissimilarity(data, "hamming", "on-demand")
    it = build_it(view, compute_potentials(view, sigma=4.0))
    candidates = suggest_thresholds(merge_table_fast(it))
    ev = evaluate(cut_threshold(it, candidates[0][0]), data.labels)
    assert ev.error_count == 0
    assert 20 <= ev.cluster_count <= 30
    report(f"mushroom: {ev.cluster_count} clusters, 0 errors at sigma=4")


def _slhc_two_cluster_purity(view, labels):
    z = slhc(view)
    members = {i: [i] for i in range(z.n_leaves)}
    for k, (left, right, _) in enumerate(z.rows[:-1]):
        members[z.n_leaves + k] = members.pop(left) + members.pop(right)
    from collections import Counter
    errors = sum(len(g) - Counter(labels[i] for i in g).most_common(1)[0][1]
                 for g in members.values())
    return 1.0 - errors / z.n_leaves


@pytest.mark.parametrize("make,sigma", [(elongated_pair, 3.0), (two_moons, 0.4)],
                         ids=["elongated-pair", "two-moons"])
def test_superiority_over_single_link(make, sigma):
    data = make(seed=0)
    view = dissimilarity(data, "euclidean")
    it = build_it(view, compute_potentials(view, sigma))
    tau = suggest_thresholds(merge_table_fast(it))[0][0]
    it_purity = evaluate(cut_threshold(it, tau), data.labels).purity
    sl_purity = _slhc_two_cluster_purity(view, data.labels)
    assert it_purity >= 0.98, f"in-tree purity {it_purity:.4f}"
    assert sl_purity <= 0.9, f"single-link purity {sl_purity:.4f}"
    report(f"{data.name}: in-tree purity {it_purity:.3f} >= 0.98 > "
           f"single-link {sl_purity:.3f} <= 0.9")
