import numpy as np

from itdendro.synth import (
    elongated_pair,
    gaussian_blobs_2d,
    gaussian_clusters_32d,
    two_moons,
)


def test_gaussian_32d_shape_and_labels():
    ds = gaussian_clusters_32d(seed=1)
    assert ds.instances.shape == (1024, 32)
    assert len(ds.labels) == 1024
    assert len(set(ds.labels)) == 16


def test_gaussian_32d_separation_guarantee():
    ds = gaussian_clusters_32d(seed=1)
    pts = ds.instances
    labels = np.array(ds.labels)
    centers = np.array([pts[labels == c].mean(axis=0) for c in sorted(set(ds.labels))])
    center_d = np.sqrt(((centers[:, None] - centers[None]) ** 2).sum(-1))
    np.fill_diagonal(center_d, np.inf)
    spreads = [np.sqrt(((pts[labels == c] - centers[i]) ** 2).sum(-1)).max()
               for i, c in enumerate(sorted(set(ds.labels)))]
    assert center_d.min() >= 9.0 * max(spreads)  # drawn at >= 10x exact spread


def test_elongated_pair_structure():
    ds = elongated_pair(seed=0)
    noise = ds.n - 220
    assert 0 < noise <= 0.03 * ds.n
    assert set(ds.labels) == {"a", "b"}
    assert ds.instances.shape[1] == 2


def test_two_moons_noise_fraction():
    ds = two_moons(seed=0)
    assert ds.n == 408  # 400 moon points + 2% noise
    assert set(ds.labels) == {"a", "b"}


def test_blobs_labels_match_geometry():
    ds = gaussian_blobs_2d(seed=2, centers=5, points_per_blob=30)
    assert ds.n == 150
    assert len(set(ds.labels)) == 5


def test_generators_are_deterministic():
    a = gaussian_clusters_32d(seed=3).instances
    b = gaussian_clusters_32d(seed=3).instances
    assert np.array_equal(a, b)
    assert np.array_equal(two_moons(seed=4).instances, two_moons(seed=4).instances)
