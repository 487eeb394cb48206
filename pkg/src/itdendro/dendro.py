"""Single-link merge tables, built fast from an in-tree or naively from scratch.

The merge table records n-1 agglomerative merges as (left, right,
height) rows. Ids are zero-based: leaves are 0..n-1 and the cluster
created by row k gets id n+k, so row children are always ids below
n+k. Heights never decrease down the rows.

The fast path exploits that the single-link merge heights of a tree are
exactly its edge weights in ascending order: sorting the in-tree edges
and replaying them through a disjoint-set structure reproduces the
merge table without ever touching pairwise dissimilarities. The naive
agglomerative implementation (slhc) and the dense-graph minimum
spanning tree (mst) are kept as independent baselines; tests replay the
equivalences between all three routes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import DissimilarityView
from .errors import IntegrityError, UsageError
from .intree import ITStructure, SparseEdgeSet


@dataclass(frozen=True)
class MergeTable:
    """(n-1) x 3 single-link merge record: (left id, right id, height)."""

    n_leaves: int
    rows: list[tuple[int, int, float]]

    @property
    def heights(self) -> list[float]:
        return [h for _, _, h in self.rows]


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by size."""

    def __init__(self, n: int):
        self.rep = list(range(n))
        self.size = [1] * n

    def find(self, i: int) -> int:
        root = i
        while self.rep[root] != root:
            root = self.rep[root]
        while self.rep[i] != root:
            self.rep[i], i = root, self.rep[i]
        return root

    def union(self, i: int, j: int) -> int:
        i, j = self.find(i), self.find(j)
        if i == j:
            return i
        if self.size[i] < self.size[j]:
            i, j = j, i
        self.rep[j] = i
        self.size[i] += self.size[j]
        return i


def _replay_merges(n: int, edges: list[tuple[int, int, float]]) -> MergeTable:
    """Kruskal-style replay of presorted tree edges into a merge table."""
    uf = UnionFind(n)
    cluster_id = list(range(n))
    rows: list[tuple[int, int, float]] = []
    for k, (a, b, w) in enumerate(edges):
        ra, rb = uf.find(a), uf.find(b)
        if ra == rb:
            raise IntegrityError(f"edge ({a}, {b}) closes a cycle")
        ca, cb = cluster_id[ra], cluster_id[rb]
        rows.append((min(ca, cb), max(ca, cb), w))
        cluster_id[uf.union(ra, rb)] = n + k
    return MergeTable(n_leaves=n, rows=rows)


def merge_table_fast(it: ITStructure) -> MergeTable:
    """Single-link merge table of the in-tree, via its sorted edges.

    Its heights column is the non-root edge weights in ascending order;
    equal weights are replayed in start-node order.
    """
    edges = [
        (i, int(it.parent[i]), float(it.weight[i]))
        for i in range(it.n)
        if i != it.root
    ]
    edges.sort(key=lambda e: (e[2], e[0]))
    return _replay_merges(it.n, edges)


def merge_table_from_edges(edges: SparseEdgeSet) -> MergeTable:
    """Single-link merge table of an arbitrary tree edge set.

    The input must be connected and acyclic (exactly n-1 edges reaching
    every node); anything else raises IntegrityError.
    """
    if len(edges.edges) != edges.n - 1:
        raise IntegrityError(
            f"{len(edges.edges)} edges cannot form a spanning tree on {edges.n} nodes"
        )
    ordered = sorted(edges.edges, key=lambda e: (e[2], e[0], e[1]))
    return _replay_merges(edges.n, ordered)


def _min_pair(matrix: np.ndarray, ids: list[int]) -> tuple[int, int, float]:
    """Smallest entry of the matrix; ties to the smallest (left, right) id pair."""
    value = matrix.min()
    if not np.isfinite(value):
        raise IntegrityError("no finite merge available: input is disconnected")
    best = pos = None
    for p, q in np.argwhere(matrix == value):
        pair = (ids[p], ids[q]) if ids[p] < ids[q] else (ids[q], ids[p])
        if best is None or pair < best:
            best = pair
            pos = (int(p), int(q)) if ids[p] < ids[q] else (int(q), int(p))
    return pos[0], pos[1], float(value)


def slhc(dist: DissimilarityView | SparseEdgeSet) -> MergeTable:
    """Naive agglomerative single-link clustering.

    Repeatedly merges the two clusters with the smallest inter-cluster
    minimum dissimilarity (ties to the smallest id pair). Accepts a full
    dissimilarity view or a sparse edge set, in which case absent pairs
    count as +inf and a disconnected graph raises IntegrityError.
    This is the definition-driven reference path; the full matrix is
    rescanned at every merge and no effort is spent on making it fast.
    """
    if isinstance(dist, SparseEdgeSet):
        n = dist.n
        matrix = np.full((n, n), np.inf)
        for a, b, w in dist.edges:
            matrix[a, b] = matrix[b, a] = w
    else:
        n = dist.n
        matrix = np.empty((n, n), dtype=np.float64)
        for i in range(n):
            matrix[i] = dist.row(i)
    np.fill_diagonal(matrix, np.inf)

    ids = list(range(n))  # cluster id at each matrix slot; merged slot is reused
    rows: list[tuple[int, int, float]] = []
    for step in range(n - 1):
        p, q, w = _min_pair(matrix, ids)
        rows.append((ids[p], ids[q], w))
        merged = np.minimum(matrix[p], matrix[q])
        merged[p] = merged[q] = np.inf
        matrix[p] = merged
        matrix[:, p] = merged
        matrix[q] = np.inf
        matrix[:, q] = np.inf
        ids[p] = n + step
    return MergeTable(n_leaves=n, rows=rows)


def mst(view: DissimilarityView) -> SparseEdgeSet:
    """Minimum spanning tree of the complete graph under the view.

    Growth-based construction from node 0; at every step the node with
    the smallest attachment distance joins the tree, distance ties going
    to the smallest node index, and its first-found best attachment
    point is kept.
    """
    n = view.n
    in_tree = np.zeros(n, dtype=bool)
    best = np.full(n, np.inf)
    attach = np.full(n, -1, dtype=np.int64)
    in_tree[0] = True
    if n > 1:
        best = view.row(0).copy()
        best[0] = np.inf
        attach[:] = 0
        attach[0] = -1

    edges: list[tuple[int, int, float]] = []
    for _ in range(n - 1):
        masked = np.where(in_tree, np.inf, best)
        u = int(np.argmin(masked))  # first occurrence = smallest index on ties
        edges.append((u, int(attach[u]), float(best[u])))
        in_tree[u] = True
        du = view.row(u)
        closer = (~in_tree) & (du < best)
        best[closer] = du[closer]
        attach[closer] = u
    return SparseEdgeSet(n=n, edges=edges)


def check_merge_table(z: MergeTable) -> None:
    """Raise IntegrityError unless every merge-table invariant holds."""
    n = z.n_leaves
    if len(z.rows) != max(n - 1, 0):
        raise IntegrityError(f"expected {n - 1} rows, got {len(z.rows)}")
    seen: set[int] = set()
    prev = None
    for k, (left, right, h) in enumerate(z.rows):
        if not left < right:
            raise IntegrityError(f"row {k}: left {left} not below right {right}")
        if not (0 <= left < n + k and 0 <= right < n + k):
            raise IntegrityError(f"row {k}: child id out of range [0, {n + k})")
        if left in seen or right in seen:
            raise IntegrityError(f"row {k}: child id referenced twice")
        seen.update((left, right))
        if h < 0:
            raise IntegrityError(f"row {k}: negative height {h}")
        if prev is not None and h < prev:
            raise IntegrityError(f"row {k}: heights decrease ({h} < {prev})")
        prev = h
    if n >= 2 and seen != set(range(2 * n - 2)):
        raise IntegrityError("child ids do not cover [0, 2n-2) exactly once")
