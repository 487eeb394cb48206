"""Command-line driver: build, cut, suggest, baseline, render.

Exit codes: 0 success, 1 usage error, 2 input format error,
3 bundle integrity error.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import bundle as bundle_io
from .data import Dataset, dissimilarity, load_categorical, load_real_csv
from .dendro import MergeTable, merge_table_fast, slhc
from .errors import FormatError, IntegrityError, ItDendroError, UsageError
from .intree import build_it, compute_potentials
from .partition import Assignment, cut_threshold, cut_top_k, evaluate, suggest_thresholds
from .svg import render_dendrogram_svg, render_scatter_svg

MATERIALIZE_LIMIT = 3000  # beyond this, rows are computed on demand


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _load(args) -> Dataset:
    if args.format == "real":
        return load_real_csv(args.input, label_column=args.label_column,
                             skip_header=args.skip_header, name=args.name)
    return load_categorical(args.input, label_column=args.label_column,
                            name=args.name)


def _default_metric(args) -> str:
    if args.metric:
        return args.metric
    return "euclidean" if args.format == "real" else "hamming"


def _pipeline(args):
    data = _load(args)
    metric = _default_metric(args)
    mode = "materialized" if data.n <= MATERIALIZE_LIMIT else "on-demand"
    view = dissimilarity(data, metric, mode)
    it = build_it(view, compute_potentials(view, args.sigma))
    return data, metric, view, it


def cmd_build(args) -> int:
    data, metric, _, it = _pipeline(args)
    merges = merge_table_fast(it)
    doc = bundle_io.make_bundle(data, args.sigma, metric, it, merges)
    bundle_io.write_bundle(doc, args.out)
    print(f"wrote bundle: {args.out} (n={data.n}, d={data.d}, metric={metric}, "
          f"sigma={args.sigma})")
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_dendrogram_svg(merges))
        print(f"wrote dendrogram: {args.svg}")
    return 0


def _cut_bundle(doc, args) -> Assignment:
    if (args.threshold is None) == (args.top_k is None):
        raise UsageError("exactly one of --threshold or --top-k is required")
    if args.threshold is not None:
        return cut_threshold(doc.it, args.threshold)
    return cut_top_k(doc.it, args.top_k)


def cmd_cut(args) -> int:
    doc = bundle_io.read_bundle(args.bundle)
    assignment = _cut_bundle(doc, args)
    bundle_io.write_assignment_csv(assignment, args.out)
    print(f"clusters: {assignment.cluster_count}")
    if args.eval:
        if doc.labels is None:
            raise UsageError("--eval requires a bundle with labels")
        ev = evaluate(assignment, doc.labels)
        print(f"error_count: {ev.error_count}")
        print(f"purity: {ev.purity:.6f}")
    return 0


def cmd_suggest(args) -> int:
    doc = bundle_io.read_bundle(args.bundle)
    candidates = suggest_thresholds(doc.merges, args.max_candidates)
    if not candidates:
        print("no positive height gaps; no thresholds to suggest")
        return 0
    for tau, gap in candidates:
        print(f"tau={tau!r} gap={gap!r}")
    return 0


def _merge_partition_at(z: MergeTable, tau: float) -> Assignment:
    """Partition from the merge rows with height <= tau (threshold semantics).

    Used for the baseline path, where no in-tree exists: cluster roots
    are the smallest member indices, and each unapplied merge is
    recorded as a removed link between its sides' representatives.
    """
    members = {i: [i] for i in range(z.n_leaves)}
    rep = {i: i for i in range(z.n_leaves)}
    removed = []
    for k, (left, right, h) in enumerate(z.rows):
        rep[z.n_leaves + k] = min(rep[left], rep[right])
        if h <= tau:
            members[z.n_leaves + k] = members.pop(left) + members.pop(right)
        else:
            removed.append((rep[left], rep[right], h))
    groups = sorted(min(g) for g in members.values())
    reps = {r: c for c, r in enumerate(groups)}
    cluster_of = np.empty(z.n_leaves, dtype=np.int64)
    for group in members.values():
        cluster_of[group] = reps[min(group)]
    return Assignment(cluster_of=cluster_of, roots=groups, threshold=float(tau),
                      removed_edges=removed)


def cmd_baseline(args) -> int:
    data = _load(args)
    if data.n > args.cap:
        raise UsageError(
            f"n={data.n} exceeds the naive-baseline cap {args.cap}; "
            f"raise it with --cap if you accept the runtime")
    metric = _default_metric(args)
    if data.n == 1:
        print("single instance: nothing to compare")
        return 0
    view = dissimilarity(data, metric, "materialized")
    it = build_it(view, compute_potentials(view, args.sigma))
    z_it = merge_table_fast(it)
    z_sl = slhc(view)

    def pick_tau(z: MergeTable) -> float:
        if args.threshold is not None:
            return args.threshold
        cands = suggest_thresholds(z)
        return cands[0][0] if cands else max(z.heights, default=0.0)

    tau_it, tau_sl = pick_tau(z_it), pick_tau(z_sl)
    a_it = cut_threshold(it, tau_it)
    a_sl = _merge_partition_at(z_sl, tau_sl)

    out = args.out.rstrip("/")
    os.makedirs(out, exist_ok=True)
    outputs = {
        f"{out}/it_assignment.csv": a_it,
        f"{out}/slhc_assignment.csv": a_sl,
    }
    for path, assignment in outputs.items():
        bundle_io.write_assignment_csv(assignment, path)
    with open(f"{out}/it_dendrogram.svg", "w") as fh:
        fh.write(render_dendrogram_svg(z_it, highlight=tau_it, coloring=a_it))
    with open(f"{out}/slhc_dendrogram.svg", "w") as fh:
        fh.write(render_dendrogram_svg(z_sl, highlight=tau_sl, coloring=a_sl))

    print(f"in-tree path:     tau={tau_it!r} clusters={a_it.cluster_count}")
    print(f"single-link path: tau={tau_sl!r} clusters={a_sl.cluster_count}")
    if data.labels is not None:
        ev_it = evaluate(a_it, data.labels)
        ev_sl = evaluate(a_sl, data.labels)
        print(f"in-tree path:     errors={ev_it.error_count} purity={ev_it.purity:.6f}")
        print(f"single-link path: errors={ev_sl.error_count} purity={ev_sl.purity:.6f}")
    return 0


def cmd_render(args) -> int:
    doc = bundle_io.read_bundle(args.bundle)
    coloring = None
    if args.threshold is not None:
        coloring = cut_threshold(doc.it, args.threshold)
    with open(args.out, "w") as fh:
        fh.write(render_dendrogram_svg(doc.merges, highlight=args.threshold,
                                       coloring=coloring))
    print(f"wrote dendrogram: {args.out}")
    if args.scatter:
        if doc.coords2d is None:
            raise UsageError("--scatter requires a bundle with 2-d coordinates")
        with open(args.scatter, "w") as fh:
            fh.write(render_scatter_svg(doc.coords2d, coloring=coloring))
        print(f"wrote scatter: {args.scatter}")
    return 0


def _add_input_flags(p):
    p.add_argument("--input", required=True, help="dataset file")
    p.add_argument("--format", choices=("real", "categorical"), default="real")
    p.add_argument("--metric", choices=("euclidean", "hamming"), default=None,
                   help="default: euclidean for real, hamming for categorical")
    p.add_argument("--sigma", type=float, required=True, help="kernel width")
    p.add_argument("--label-column", type=int, default=None)
    p.add_argument("--skip-header", action="store_true")
    p.add_argument("--name", default=None, help="dataset name stored in outputs")


def build_parser() -> _Parser:
    parser = _Parser(prog="itdendro", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build in-tree and merge table, write a bundle")
    _add_input_flags(p)
    p.add_argument("--out", required=True, help="bundle output path")
    p.add_argument("--svg", default=None, help="also render the dendrogram")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("cut", help="cut a bundle and write the assignment CSV")
    p.add_argument("--bundle", required=True)
    p.add_argument("--threshold", type=float, default=None)
    p.add_argument("--top-k", type=int, default=None)
    p.add_argument("--out", required=True, help="assignment CSV path")
    p.add_argument("--eval", action="store_true",
                   help="report error count and purity against bundle labels")
    p.set_defaults(fn=cmd_cut)

    p = sub.add_parser("suggest", help="print candidate thresholds at height gaps")
    p.add_argument("--bundle", required=True)
    p.add_argument("--max-candidates", type=int, default=5)
    p.set_defaults(fn=cmd_suggest)

    p = sub.add_parser("baseline", help="compare against naive single-link clustering")
    _add_input_flags(p)
    p.add_argument("--threshold", type=float, default=None,
                   help="cut level for both paths; default: each path's top gap")
    p.add_argument("--cap", type=int, default=5000,
                   help="refuse the naive baseline beyond this many instances")
    p.add_argument("--out", required=True, help="output directory (must exist)")
    p.set_defaults(fn=cmd_baseline)

    p = sub.add_parser("render", help="render a bundle's dendrogram (and scatter) as SVG")
    p.add_argument("--bundle", required=True)
    p.add_argument("--out", required=True, help="dendrogram SVG path")
    p.add_argument("--threshold", type=float, default=None)
    p.add_argument("--scatter", default=None, help="scatter SVG path (2-d bundles)")
    p.set_defaults(fn=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ItDendroError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
