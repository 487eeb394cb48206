"""Seeded synthetic datasets for experiments and the acceptance suite.

Each generator returns (Dataset, labels) with labels attached to the
dataset as annotations. Generators assert the geometric guarantees the
downstream experiments rely on, so a bad seed fails loudly instead of
producing a silently unusable dataset.
"""

from __future__ import annotations

import numpy as np

from .data import Dataset


def _pairwise_min(points: np.ndarray) -> float:
    d = np.sqrt(((points[:, None, :] - points[None, :, :]) ** 2).sum(-1))
    np.fill_diagonal(d, np.inf)
    return float(d.min())


def gaussian_clusters_32d(seed: int = 0, clusters: int = 16,
                          points_per_cluster: int = 64, dims: int = 32,
                          separation_factor: float = 10.0) -> Dataset:
    """Well-separated Gaussian blobs in 32 dimensions, 1024 points total.

    Coordinates are scaled so that within-cluster nearest-neighbor
    distances sit near 1 (a kernel width of 1 resolves the blobs).
    Center separation is at least separation_factor times the largest
    within-cluster spread; violating seeds are rejected.
    """
    rng = np.random.default_rng(seed)
    point_std = 0.125  # within-cluster pair distance ~ std * sqrt(2 * dims) = 1
    for attempt in range(100):
        centers = rng.normal(0.0, 4.0, size=(clusters, dims))
        offsets = rng.normal(0.0, point_std,
                             size=(clusters, points_per_cluster, dims))
        points = (centers[:, None, :] + offsets).reshape(-1, dims)
        spread = float(np.sqrt((offsets ** 2).sum(-1)).max())  # max |point - center|
        if _pairwise_min(centers) >= separation_factor * spread:
            labels = [f"c{c}" for c in range(clusters)
                      for _ in range(points_per_cluster)]
            return Dataset(instances=points, kind="real", labels=labels,
                           name=f"gauss32d-{seed}")
    raise AssertionError("could not draw centers with the required separation")


def elongated_pair(seed: int = 0) -> Dataset:
    """Two parallel elongated clusters with sparse peripheral noise.

    Strips of dense points run along y=0 and y=2. About 2% of the
    points are noise: a few stragglers hugging either strip plus one
    isolated point past the strip ends, whose attachment distance
    exceeds the strip separation. Noise is labeled by the nearer strip.
    """
    rng = np.random.default_rng(seed)
    nx_a, nx_b = 120, 100
    xa = np.linspace(0.0, 10.0, nx_a) + rng.normal(0, 0.01, nx_a)
    ya = rng.normal(0.0, 0.03, nx_a)
    xb = np.linspace(0.0, 10.0, nx_b) + rng.normal(0, 0.01, nx_b)
    yb = 2.0 + rng.normal(0.0, 0.03, nx_b)
    strip_a = np.column_stack([xa, ya])
    strip_b = np.column_stack([xb, yb])

    near_noise = np.array([
        [1.5, 0.45], [4.0, 0.55], [7.5, 0.40],
        [2.5, 1.55], [6.0, 1.45],
    ])
    near_noise = near_noise + rng.normal(0, 0.02, near_noise.shape)
    isolated = np.array([[12.2, 1.0]])

    points = np.vstack([strip_a, strip_b, near_noise, isolated])
    labels = (["a"] * nx_a + ["b"] * nx_b
              + ["a" if y < 1.0 else "b" for _, y in near_noise]
              + ["a"])
    return Dataset(instances=points, kind="real", labels=labels,
                   name=f"elongated-pair-{seed}")


def two_moons(seed: int = 0, points_per_moon: int = 200,
              jitter: float = 0.03) -> Dataset:
    """Two interleaving half-circles with 2% off-manifold noise.

    Includes one far straggler in a corner of the bounding box; the
    remaining noise floats a controlled distance off a random moon
    point. Noise is labeled by the nearest moon point.
    """
    rng = np.random.default_rng(seed)
    t = np.linspace(0.0, np.pi, points_per_moon)
    moon_a = np.column_stack([np.cos(t), np.sin(t)])
    moon_b = np.column_stack([1.0 - np.cos(t), 0.5 - np.sin(t)])
    moon_a += rng.normal(0, jitter, moon_a.shape)
    moon_b += rng.normal(0, jitter, moon_b.shape)
    moons = np.vstack([moon_a, moon_b])
    moon_labels = ["a"] * points_per_moon + ["b"] * points_per_moon

    n_noise = max(int(round(0.02 * 2 * points_per_moon)) - 1, 0)
    anchors = moons[rng.integers(0, len(moons), n_noise)]
    angles = rng.uniform(0, 2 * np.pi, n_noise)
    radii = rng.uniform(0.28, 0.42, n_noise)
    near_noise = anchors + radii[:, None] * np.column_stack(
        [np.cos(angles), np.sin(angles)])
    straggler = np.array([[2.6, 1.55]])
    noise = np.vstack([near_noise, straggler])

    def nearest_moon_label(p):
        d = np.sqrt(((moons - p) ** 2).sum(-1))
        return moon_labels[int(np.argmin(d))]

    points = np.vstack([moons, noise])
    labels = moon_labels + [nearest_moon_label(p) for p in noise]
    return Dataset(instances=points, kind="real", labels=labels,
                   name=f"two-moons-{seed}")


def gaussian_blobs_2d(seed: int = 0, centers: int = 7,
                      points_per_blob: int = 50, spread: float = 0.35,
                      box: float = 10.0) -> Dataset:
    """Scattered round 2-D blobs (an Aggregation-style mixture)."""
    rng = np.random.default_rng(seed)
    placed: list[np.ndarray] = []
    for attempt in range(10000):
        cand = rng.uniform(0.0, box, size=2)
        if all(np.linalg.norm(cand - m) >= 8.0 * spread for m in placed):
            placed.append(cand)
            if len(placed) == centers:
                break
    else:
        raise AssertionError("could not place blob centers apart")
    mus = np.array(placed)
    pts = mus[:, None, :] + rng.normal(0, spread, (centers, points_per_blob, 2))
    labels = [f"b{c}" for c in range(centers) for _ in range(points_per_blob)]
    return Dataset(instances=pts.reshape(-1, 2), kind="real", labels=labels,
                   name=f"blobs2d-{seed}")
