"""Self-describing JSON bundle: the serialized pipeline state.

A bundle carries everything the explorer UI or a later cut needs
(parent, weight, potential, root, merge rows, optional 2-d coordinates
and labels) so dissimilarities never have to be recomputed. Reals are
serialized as shortest round-trip decimals; indices are zero-based.
Loading revalidates the structural invariants, including the identity
that the merge heights are exactly the sorted non-root edge weights,
so a mutated bundle is rejected.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np

from .data import Dataset
from .dendro import MergeTable, check_merge_table
from .errors import FormatError, IntegrityError
from .intree import ITStructure
from .partition import Assignment

SCHEMA_VERSION = "itdendro-bundle/1"

_SCHEMA_NOTES = {
    "version": "bundle schema identifier",
    "index_base": "all node and cluster indices are zero-based",
    "meta": "dataset name, kernel width sigma, metric, instance count n, dimension d, kind",
    "coords2d": "n x 2 raw coordinates, present only for 2-d real datasets",
    "labels": "optional annotation string per instance",
    "it": "in-tree: parent index, edge weight and potential per node, plus root; parent[root] == root",
    "merges": "n-1 single-link rows [left, right, height]; leaves 0..n-1, row k creates id n+k",
    "identity": "the heights column equals the sorted non-root edge weights, exactly",
}


@dataclass(frozen=True)
class DendroBundle:
    name: str
    sigma: float
    metric: str
    kind: str
    n: int
    d: int
    it: ITStructure
    merges: MergeTable
    coords2d: np.ndarray | None = None
    labels: list[str] | None = None


def make_bundle(data: Dataset, sigma: float, metric: str,
                it: ITStructure, merges: MergeTable) -> DendroBundle:
    coords = None
    if data.kind == "real" and data.d == 2:
        coords = np.asarray(data.instances, dtype=np.float64)
    return DendroBundle(
        name=data.name, sigma=float(sigma), metric=metric, kind=data.kind,
        n=data.n, d=data.d, it=it, merges=merges,
        coords2d=coords, labels=data.labels,
    )


def serialize(bundle: DendroBundle) -> str:
    doc = {
        "schema": {"version": SCHEMA_VERSION, "index_base": 0,
                   "notes": _SCHEMA_NOTES},
        "meta": {
            "name": bundle.name,
            "sigma": bundle.sigma,
            "metric": bundle.metric,
            "kind": bundle.kind,
            "n": bundle.n,
            "d": bundle.d,
        },
        "coords2d": None if bundle.coords2d is None else bundle.coords2d.tolist(),
        "labels": bundle.labels,
        "it": {
            "parent": bundle.it.parent.tolist(),
            "weight": bundle.it.weight.tolist(),
            "potential": bundle.it.potential.tolist(),
            "root": int(bundle.it.root),
        },
        "merges": [[l, r, h] for l, r, h in bundle.merges.rows],
    }
    return json.dumps(doc, indent=1)


def _require(condition: bool, invariant: str) -> None:
    if not condition:
        raise IntegrityError(f"bundle violates invariant: {invariant}")


def parse(text: str) -> DendroBundle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bundle is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("bundle must be a JSON object")

    version = doc.get("schema", {}).get("version")
    if version != SCHEMA_VERSION:
        raise FormatError(f"unsupported bundle schema {version!r}, "
                          f"expected {SCHEMA_VERSION!r}")
    try:
        meta = doc["meta"]
        it_doc = doc["it"]
        merges_doc = doc["merges"]
        n = int(meta["n"])
        parent = np.asarray(it_doc["parent"], dtype=np.int64)
        weight = np.asarray(it_doc["weight"], dtype=np.float64)
        potential = np.asarray(it_doc["potential"], dtype=np.float64)
        root = int(it_doc["root"])
        rows = [(int(l), int(r), float(h)) for l, r, h in merges_doc]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bundle field missing or malformed: {exc}") from exc

    _require(len(parent) == n, "it.parent length equals meta.n")
    _require(len(weight) == n, "it.weight length equals meta.n")
    _require(len(potential) == n, "it.potential length equals meta.n")
    _require(0 <= root < n, "it.root is a valid node index")
    _require(bool(((parent >= 0) & (parent < n)).all()), "parent indices in range")
    self_loops = np.flatnonzero(parent == np.arange(n))
    _require(len(self_loops) == 1 and self_loops[0] == root,
             "parent has exactly one self-loop, at the root")
    _require(bool((weight >= 0).all()), "weights are non-negative")
    _require(weight[root] == 0.0, "root weight is zero")
    reaches = np.zeros(n, dtype=bool)
    reaches[root] = True
    for i in range(n):
        path = []
        node = i
        while not reaches[node]:
            path.append(node)
            node = int(parent[node])
            if len(path) > n:
                _require(False, "parent chains reach the root")
        reaches[path] = True
    _require(len(rows) == n - 1, "merges has n-1 rows")

    merges = MergeTable(n_leaves=n, rows=rows)
    try:
        check_merge_table(merges)
    except IntegrityError as exc:
        raise IntegrityError(f"bundle violates invariant: {exc}") from exc
    expected = sorted(float(weight[i]) for i in range(n) if i != root)
    _require(merges.heights == expected,
             "merge heights equal the sorted non-root edge weights")

    coords = doc.get("coords2d")
    if coords is not None:
        coords = np.asarray(coords, dtype=np.float64)
        _require(coords.shape == (n, 2), "coords2d is an n x 2 array")
    labels = doc.get("labels")
    if labels is not None:
        labels = [str(x) for x in labels]
        _require(len(labels) == n, "labels length equals meta.n")

    it = ITStructure(parent=parent, weight=weight, potential=potential, root=root)
    return DendroBundle(
        name=str(meta.get("name", "dataset")), sigma=float(meta["sigma"]),
        metric=str(meta["metric"]), kind=str(meta.get("kind", "real")),
        n=n, d=int(meta["d"]), it=it, merges=merges,
        coords2d=coords, labels=labels,
    )


def write_bundle(bundle: DendroBundle, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(serialize(bundle))
        fh.write("\n")


def read_bundle(path: str) -> DendroBundle:
    try:
        with open(path) as fh:
            return parse(fh.read())
    except OSError as exc:
        raise FormatError(f"cannot read bundle {path}: {exc}") from exc


def write_assignment_csv(assignment: Assignment, path: str) -> None:
    """node,cluster,root rows, one per node."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["node", "cluster", "root"])
        for node, cluster in enumerate(assignment.cluster_of):
            writer.writerow([node, int(cluster), assignment.roots[int(cluster)]])


def read_assignment_csv(path: str) -> list[tuple[int, int, int]]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["node", "cluster", "root"]:
            raise FormatError(f"{path}: expected header node,cluster,root")
        return [(int(a), int(b), int(c)) for a, b, c in reader]
