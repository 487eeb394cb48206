"""Dataset loading and pairwise dissimilarity views.

Real-valued datasets come from plain CSV files (one instance per line,
decimal fields, optional header, optional label column). Categorical
datasets come from comma-separated token files in the UCI layout
(class token first by convention, selectable by index).

Dissimilarities are exposed through a row-oriented view that either
materializes the full n x n matrix or computes rows on demand. Both
modes run the same per-row kernel, so they return bitwise-identical
values.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .errors import FormatError, UsageError

METRICS = ("euclidean", "hamming")
MODES = ("materialized", "on-demand")


@dataclass(frozen=True)
class Dataset:
    """N instances of dimension d, real-valued or categorical.

    instances: float64 array (N, d) for kind="real", unicode token array
    (N, d) for kind="categorical". labels, when present, is one
    annotation string per instance.
    """

    instances: np.ndarray
    kind: str
    labels: list[str] | None = None
    name: str = "dataset"

    def __post_init__(self):
        if self.instances.ndim != 2:
            raise FormatError("instances must be a 2-d array")
        n, d = self.instances.shape
        if n < 1 or d < 1:
            raise FormatError(f"dataset must have N >= 1 and d >= 1, got N={n}, d={d}")
        if self.kind not in ("real", "categorical"):
            raise UsageError(f"unknown dataset kind: {self.kind!r}")
        if self.labels is not None and len(self.labels) != n:
            raise FormatError(
                f"labels length {len(self.labels)} does not match N={n}"
            )

    @property
    def n(self) -> int:
        return self.instances.shape[0]

    @property
    def d(self) -> int:
        return self.instances.shape[1]


def _euclidean_row(x: np.ndarray, i: int) -> np.ndarray:
    diff = x - x[i]
    return np.sqrt(np.einsum("ij,ij->i", diff, diff))


def _hamming_row(x: np.ndarray, i: int) -> np.ndarray:
    return (x != x[i]).sum(axis=1).astype(np.float64)


_ROW_KERNELS = {"euclidean": _euclidean_row, "hamming": _hamming_row}


@dataclass
class DissimilarityView:
    """Symmetric non-negative pairwise dissimilarity provider.

    lookup(i, i) == 0 and lookup(i, j) == lookup(j, i) hold for every
    view. row(i) returns the full i-th row; in "materialized" mode rows
    are precomputed once, in "on-demand" mode each call recomputes the
    row with the identical kernel (pure and reentrant).
    """

    n: int
    mode: str
    _row_fn: object = field(repr=False)
    _matrix: np.ndarray | None = field(default=None, repr=False)

    def row(self, i: int) -> np.ndarray:
        if self._matrix is not None:
            return self._matrix[i]
        return self._row_fn(i)

    def lookup(self, i: int, j: int) -> float:
        return float(self.row(i)[j])


def dissimilarity(data: Dataset, metric: str = "euclidean",
                  mode: str = "materialized") -> DissimilarityView:
    """Build a pairwise dissimilarity view over a dataset.

    metric "euclidean" requires real data; "hamming" (count of differing
    attribute positions) requires categorical data.
    """
    if metric not in METRICS:
        raise UsageError(f"unknown metric {metric!r}, expected one of {METRICS}")
    if mode not in MODES:
        raise UsageError(f"unknown mode {mode!r}, expected one of {MODES}")
    required_kind = "real" if metric == "euclidean" else "categorical"
    if data.kind != required_kind:
        raise UsageError(
            f"metric {metric!r} requires kind={required_kind!r}, got {data.kind!r}"
        )

    x = data.instances
    if metric == "hamming":
        # per-column integer codes: mismatch counts are unchanged, rows get fast
        x = np.column_stack([
            np.unique(x[:, c], return_inverse=True)[1] for c in range(data.d)
        ])
    kernel = _ROW_KERNELS[metric]

    def row_fn(i: int, _x=x, _kernel=kernel) -> np.ndarray:
        return _kernel(_x, i)

    matrix = None
    if mode == "materialized":
        matrix = np.empty((data.n, data.n), dtype=np.float64)
        for i in range(data.n):
            matrix[i] = row_fn(i)
    return DissimilarityView(n=data.n, mode=mode, _row_fn=row_fn, _matrix=matrix)


def _read_rows(path: str) -> list[list[str]]:
    try:
        with open(path, newline="") as fh:
            return [row for row in csv.reader(fh) if row and any(f.strip() for f in row)]
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _split_label_column(row: list[str], label_column: int, line_no: int) -> tuple[str, list[str]]:
    try:
        label = row[label_column].strip()
    except IndexError:
        raise FormatError(
            f"line {line_no}: label column {label_column} out of range "
            f"for row with {len(row)} fields"
        ) from None
    rest = [f for k, f in enumerate(row) if k != label_column % len(row)]
    return label, rest


def load_real_csv(path: str, label_column: int | None = None,
                  skip_header: bool = False, name: str | None = None) -> Dataset:
    """Load a real-valued CSV dataset.

    Every non-label field must parse as a finite real number. Ragged
    rows and non-numeric fields are reported with their 1-based line
    and column.
    """
    rows = _read_rows(path)
    if skip_header and rows:
        rows = rows[1:]
    if not rows:
        raise FormatError(f"{path}: empty input")

    labels: list[str] | None = [] if label_column is not None else None
    parsed: list[list[float]] = []
    width = None
    for line_no, row in enumerate(rows, start=1):
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise FormatError(
                f"{path}: ragged row at line {line_no}: "
                f"expected {width} fields, got {len(row)}"
            )
        fields = row
        if label_column is not None:
            label, fields = _split_label_column(row, label_column, line_no)
            labels.append(label)
        values = []
        for col_no, fld in enumerate(fields, start=1):
            try:
                v = float(fld)
            except ValueError:
                raise FormatError(
                    f"{path}: parse error at row {line_no}, column {col_no}: "
                    f"{fld.strip()!r} is not a number"
                ) from None
            if not np.isfinite(v):
                raise FormatError(
                    f"{path}: non-finite value at row {line_no}, column {col_no}"
                )
            values.append(v)
        parsed.append(values)

    instances = np.asarray(parsed, dtype=np.float64)
    if instances.shape[1] < 1:
        raise FormatError(f"{path}: rows have no feature columns")
    return Dataset(instances=instances, kind="real", labels=labels,
                   name=name or path)


def load_categorical(path: str, label_column: int | None = 0,
                     name: str | None = None) -> Dataset:
    """Load a categorical token dataset (UCI layout: one token per attribute).

    label_column selects the annotation column (0 = first, the UCI
    Mushroom convention); pass None to keep all columns as attributes.
    """
    rows = _read_rows(path)
    if not rows:
        raise FormatError(f"{path}: empty input")

    labels: list[str] | None = [] if label_column is not None else None
    parsed: list[list[str]] = []
    width = len(rows[0])
    for line_no, row in enumerate(rows, start=1):
        if len(row) != width:
            raise FormatError(
                f"{path}: inconsistent token count at line {line_no}: "
                f"expected {width}, got {len(row)}"
            )
        fields = [f.strip() for f in row]
        if label_column is not None:
            label, fields = _split_label_column(fields, label_column, line_no)
            labels.append(label)
        parsed.append(fields)

    if not parsed or not parsed[0]:
        raise FormatError(f"{path}: rows have no attribute columns")
    instances = np.asarray(parsed, dtype=np.str_)
    return Dataset(instances=instances, kind="categorical", labels=labels,
                   name=name or path)
