"""Kernel potential field and in-tree construction by nearest-neighbor descent.

Every node gets a potential P_i = -sum_{j != i} exp(-(d_ij / sigma)^2),
a negated Gaussian-kernel density estimate: dense regions have low
potential. Each node then links to its nearest neighbor of strictly
lower potential, which yields a directed tree (the in-tree) whose root
is the global potential minimum. Potential ties are broken by node
index, so the descent order is the strict lexicographic order on
(potential, index) and the construction is total and deterministic.

The kernel is a configuration point: alternative decay profiles can be
registered in KERNELS without changing the API.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import DissimilarityView
from .errors import IntegrityError, UsageError


def _gaussian(scaled: np.ndarray) -> np.ndarray:
    return np.exp(-(scaled * scaled))


def _exponential(scaled: np.ndarray) -> np.ndarray:
    return np.exp(-scaled)


KERNELS = {"gaussian": _gaussian, "exponential": _exponential}


@dataclass(frozen=True)
class Potentials:
    """Per-node potential values and the kernel width that produced them."""

    values: np.ndarray
    sigma: float

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ITStructure:
    """In-tree over n nodes: parent index, edge weight, potential, root.

    parent[root] == root and weight[root] == 0; every other node i
    points to its nearest strictly-lower-(potential, index) neighbor
    with weight[i] equal to that dissimilarity. The n-1 directed edges
    form a spanning tree when directions are ignored.
    """

    parent: np.ndarray
    weight: np.ndarray
    potential: np.ndarray
    root: int

    @property
    def n(self) -> int:
        return len(self.parent)


@dataclass(frozen=True)
class SparseEdgeSet:
    """Undirected weighted edge list on n nodes; (a, b) stored once per pair."""

    n: int
    edges: list[tuple[int, int, float]]

    def canonical(self) -> set[tuple[int, int, float]]:
        """Orientation-free representation, for set comparisons."""
        return {(a, b, w) if a < b else (b, a, w) for a, b, w in self.edges}


def compute_potentials(view: DissimilarityView, sigma: float,
                       kernel: str = "gaussian") -> Potentials:
    """Compute the potential field over a dissimilarity view.

    Each row is accumulated in ascending neighbor order by a fixed
    deterministic reduction, so repeated runs are bit-identical.
    """
    if sigma <= 0:
        raise UsageError(f"sigma must be positive, got {sigma}")
    if kernel not in KERNELS:
        raise UsageError(f"unknown kernel {kernel!r}, expected one of {sorted(KERNELS)}")
    decay = KERNELS[kernel]
    n = view.n
    values = np.empty(n, dtype=np.float64)
    for i in range(n):
        contrib = decay(view.row(i) / sigma)
        contrib[i] = 0.0
        values[i] = -np.add.reduce(contrib)
    return Potentials(values=values, sigma=float(sigma))


def build_it(view: DissimilarityView, pot: Potentials) -> ITStructure:
    """Construct the in-tree by nearest-neighbor descent.

    The root is the node minimizing (potential, index); every other
    node links to the candidate of strictly smaller (potential, index)
    at minimal dissimilarity, distance ties going to the smallest
    candidate index.
    """
    n = view.n
    if pot.n != n:
        raise UsageError(f"potentials cover {pot.n} nodes, view has {n}")
    p = pot.values
    idx = np.arange(n)
    root = int(np.argmin(p))  # first occurrence = smallest index on ties

    parent = np.arange(n)
    weight = np.zeros(n, dtype=np.float64)
    for i in range(n):
        if i == root:
            continue
        mask = (p < p[i]) | ((p == p[i]) & (idx < i))
        candidates = idx[mask]
        dists = view.row(i)[candidates]
        k = int(np.argmin(dists))  # first min = smallest candidate index
        parent[i] = candidates[k]
        weight[i] = dists[k]
    return ITStructure(parent=parent, weight=weight, potential=p.copy(), root=root)


def it_to_sparse_edges(it: ITStructure) -> SparseEdgeSet:
    """Drop directions and the potential vector: the n-1 edges (i, parent[i])."""
    edges = [
        (int(i), int(it.parent[i]), float(it.weight[i]))
        for i in range(it.n)
        if i != it.root
    ]
    return SparseEdgeSet(n=it.n, edges=edges)


def check_it_structure(it: ITStructure, view: DissimilarityView | None = None) -> None:
    """Raise IntegrityError unless every in-tree invariant holds.

    With a view, also checks weight[i] == lookup(i, parent[i]) exactly.
    """
    n = it.n
    if not (len(it.weight) == len(it.potential) == n):
        raise IntegrityError("parent, weight and potential lengths differ")
    self_loops = np.flatnonzero(it.parent == np.arange(n))
    if len(self_loops) != 1 or self_loops[0] != it.root:
        raise IntegrityError(
            f"expected exactly one self-parent at root={it.root}, got {self_loops.tolist()}"
        )
    if it.weight[it.root] != 0.0:
        raise IntegrityError("root must carry zero weight")

    p = it.potential
    for i in range(n):
        if i == it.root:
            continue
        j = int(it.parent[i])
        if not (0 <= j < n):
            raise IntegrityError(f"parent[{i}]={j} out of range")
        if not ((p[j], j) < (p[i], i)):
            raise IntegrityError(
                f"descent order violated: ({p[j]}, {j}) !< ({p[i]}, {i})"
            )
        if view is not None and it.weight[i] != view.lookup(i, j):
            raise IntegrityError(f"weight[{i}] differs from lookup({i}, {j})")

    # Strict lex descent already forbids cycles; verify reachability anyway
    # (memoized chase, O(n) over all start nodes).
    reaches = np.zeros(n, dtype=bool)
    reaches[it.root] = True
    for i in range(n):
        path = []
        node = i
        while not reaches[node]:
            path.append(node)
            node = int(it.parent[node])
            if len(path) > n:
                raise IntegrityError(f"parent chain from {i} does not reach the root")
        reaches[path] = True
    undirected = {(min(i, int(it.parent[i])), max(i, int(it.parent[i])))
                  for i in range(n) if i != it.root}
    if len(undirected) != n - 1:
        raise IntegrityError("directed edges do not form n-1 distinct undirected edges")
