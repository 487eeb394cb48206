#!/usr/bin/env python3
"""Regenerate the explorer UI test fixtures.

Writes three bundles (4-point example, 2-d blob set, mushroom-sized
16-d synthetic) plus golden assignment CSVs at 5 thresholds each, all
produced by the primary pipeline, and a manifest the UI tests iterate.
"""

import json
import os

import numpy as np

from itdendro.bundle import make_bundle, write_assignment_csv, write_bundle
from itdendro.data import Dataset, dissimilarity
from itdendro.dendro import merge_table_fast
from itdendro.intree import build_it, compute_potentials
from itdendro.partition import cut_threshold, suggest_thresholds
from itdendro.synth import gaussian_blobs_2d, gaussian_clusters_32d

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "frontend", "fixtures")


def build_bundle(data, sigma):
    view = dissimilarity(data, "euclidean")
    it = build_it(view, compute_potentials(view, sigma))
    return it, make_bundle(data, sigma, "euclidean", it, merge_table_fast(it))


def tau_grid(z):
    heights = z.heights
    lo, hi = heights[0], heights[-1]
    cands = suggest_thresholds(z)
    top = cands[0][0] if cands else hi
    pool = [0.0, lo, top, (lo + hi) / 2.0, hi, hi * 1.25, lo / 2.0]
    grid = sorted(set(pool))
    assert len(grid) >= 5, f"degenerate height spread: {heights}"
    return grid[:5]


def main():
    os.makedirs(FIXTURES, exist_ok=True)
    manifest = []

    quad = Dataset(instances=np.array([[0.0], [1.0], [5.0], [6.0]]),
                   kind="real", labels=["a", "a", "b", "b"], name="quad")
    blobs = gaussian_blobs_2d(seed=0, centers=7, points_per_blob=50)
    big = gaussian_clusters_32d(seed=7, clusters=12, points_per_cluster=677,
                                dims=16)
    for name, data, sigma in [("quad", quad, 1.0), ("blobs", blobs, 0.5),
                              ("big", big, 1.0)]:
        it, doc = build_bundle(data, sigma)
        bundle_file = f"{name}.bundle.json"
        write_bundle(doc, os.path.join(FIXTURES, bundle_file))
        taus, goldens = tau_grid(doc.merges), []
        for k, tau in enumerate(taus):
            golden = f"{name}.tau{k}.csv"
            write_assignment_csv(cut_threshold(it, tau),
                                 os.path.join(FIXTURES, golden))
            goldens.append(golden)
        manifest.append({"name": name, "bundle": bundle_file,
                         "taus": taus, "golden": goldens})
        print(f"{name}: n={data.n} taus={taus}")

    with open(os.path.join(FIXTURES, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=1)
    print(f"fixtures in {FIXTURES}")


if __name__ == "__main__":
    main()
