"""Edge removal and cluster assignment on the in-tree.

Cutting removes every edge strictly heavier than the threshold (an edge
exactly at the threshold survives, i.e. the cut level is inclusive);
the variant cut_top_k removes exactly the k heaviest edges instead.
Assignment then follows parent pointers to the nearest terminal node:
nodes sharing a root share a cluster. Cluster ids are numbered by
ascending root index.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .dendro import MergeTable
from .errors import IntegrityError, UsageError
from .intree import ITStructure


@dataclass(frozen=True)
class Assignment:
    """Cluster id per node, the roots that define them, and the cut applied.

    threshold holds the tau of a threshold cut or the k of a top-k cut.
    Exactly len(removed_edges) + 1 clusters exist.
    """

    cluster_of: np.ndarray
    roots: list[int]
    threshold: float
    removed_edges: list[tuple[int, int, float]]

    @property
    def cluster_count(self) -> int:
        return len(self.roots)


@dataclass(frozen=True)
class Evaluation:
    cluster_count: int
    error_count: int
    purity: float


def _assign_from_removed(it: ITStructure, removed: np.ndarray,
                         threshold: float) -> Assignment:
    """Root-finding over the tree with the flagged edges deleted.

    removed[i] marks node i's outgoing edge as deleted, making i a local
    root. The chase is memoized, so total work is O(n).
    """
    n = it.n
    terminal = removed.copy()
    terminal[it.root] = True
    root_of = np.full(n, -1, dtype=np.int64)
    for i in range(n):
        path = []
        node = i
        while root_of[node] < 0:
            if terminal[node]:
                root_of[node] = node
                break
            path.append(node)
            node = int(it.parent[node])
            if len(path) > n:  # corrupt parent array; a valid in-tree cannot cycle
                raise IntegrityError(f"parent chain from {i} does not terminate")
        target = root_of[node]
        if path:
            root_of[path] = target

    roots = sorted(int(r) for r in np.unique(root_of))
    index_of = {r: c for c, r in enumerate(roots)}
    cluster_of = np.array([index_of[int(r)] for r in root_of], dtype=np.int64)
    removed_edges = [
        (int(i), int(it.parent[i]), float(it.weight[i]))
        for i in np.flatnonzero(removed)
    ]
    return Assignment(cluster_of=cluster_of, roots=roots, threshold=threshold,
                      removed_edges=removed_edges)


def cut_threshold(it: ITStructure, tau: float) -> Assignment:
    """Remove every edge with weight strictly above tau, then assign clusters."""
    if tau < 0:
        raise UsageError(f"threshold must be non-negative, got {tau}")
    removed = it.weight > tau
    removed[it.root] = False
    return _assign_from_removed(it, removed, float(tau))


def cut_top_k(it: ITStructure, k: int) -> Assignment:
    """Remove exactly the k heaviest edges (weight ties: larger start index first)."""
    if k < 0 or k > it.n - 1:
        raise UsageError(f"k must be in [0, {it.n - 1}], got {k}")
    order = sorted(
        (i for i in range(it.n) if i != it.root),
        key=lambda i: (-it.weight[i], -i),
    )
    removed = np.zeros(it.n, dtype=bool)
    removed[order[:k]] = True
    return _assign_from_removed(it, removed, float(k))


def suggest_thresholds(z: MergeTable, max_candidates: int = 5) -> list[tuple[float, float]]:
    """Candidate cut levels at the midpoints of the largest height gaps.

    Returns (tau, gap) pairs ordered by descending gap (equal gaps by
    ascending midpoint); zero gaps never appear, so an all-equal table
    yields no candidates.
    """
    heights = z.heights
    candidates = []
    for lo, hi in zip(heights, heights[1:]):
        if hi > lo:
            candidates.append(((lo + hi) / 2.0, hi - lo))
    candidates.sort(key=lambda c: (-c[1], c[0]))
    return candidates[:max_candidates]


def evaluate(assignment: Assignment, labels: list[str]) -> Evaluation:
    """Match clusters against annotations by majority label.

    error_count sums, over clusters, the members not carrying the
    cluster's majority label; purity is 1 - error_count / N.
    """
    n = len(assignment.cluster_of)
    if len(labels) != n:
        raise UsageError(f"got {len(labels)} labels for {n} nodes")
    errors = 0
    for c in range(assignment.cluster_count):
        members = [labels[i] for i in np.flatnonzero(assignment.cluster_of == c)]
        errors += len(members) - Counter(members).most_common(1)[0][1]
    return Evaluation(
        cluster_count=assignment.cluster_count,
        error_count=errors,
        purity=1.0 - errors / n,
    )
