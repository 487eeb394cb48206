"""In-tree clustering with single-link dendrogram visualization.

Pipeline: load a dataset, derive pairwise dissimilarities, compute the
kernel potential field, build the in-tree by nearest-neighbor descent,
turn its sorted edges into a single-link merge table, then cut edges by
threshold (or top-k) and assign clusters by root finding.
"""

from .bundle import (
    DendroBundle,
    make_bundle,
    parse,
    read_bundle,
    serialize,
    write_assignment_csv,
    write_bundle,
)
from .data import Dataset, DissimilarityView, dissimilarity, load_categorical, load_real_csv
from .dendro import (
    MergeTable,
    merge_table_fast,
    merge_table_from_edges,
    mst,
    slhc,
)
from .errors import FormatError, IntegrityError, ItDendroError, UsageError
from .intree import (
    ITStructure,
    Potentials,
    SparseEdgeSet,
    build_it,
    compute_potentials,
    it_to_sparse_edges,
)
from .partition import (
    Assignment,
    Evaluation,
    cut_threshold,
    cut_top_k,
    evaluate,
    suggest_thresholds,
)
from .svg import render_dendrogram_svg, render_scatter_svg

__all__ = [
    "Assignment",
    "Dataset",
    "DendroBundle",
    "DissimilarityView",
    "Evaluation",
    "FormatError",
    "ITStructure",
    "IntegrityError",
    "ItDendroError",
    "MergeTable",
    "Potentials",
    "SparseEdgeSet",
    "UsageError",
    "build_it",
    "compute_potentials",
    "cut_threshold",
    "cut_top_k",
    "dissimilarity",
    "evaluate",
    "it_to_sparse_edges",
    "load_categorical",
    "load_real_csv",
    "make_bundle",
    "merge_table_fast",
    "merge_table_from_edges",
    "mst",
    "parse",
    "read_bundle",
    "render_dendrogram_svg",
    "render_scatter_svg",
    "serialize",
    "slhc",
    "suggest_thresholds",
    "write_assignment_csv",
    "write_bundle",
]
