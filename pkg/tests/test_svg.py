import numpy as np

from itdendro.data import Dataset, dissimilarity
from itdendro.dendro import MergeTable, merge_table_fast
from itdendro.intree import build_it, compute_potentials
from itdendro.partition import cut_threshold
from itdendro.svg import GRAY, PALETTE, leaf_order, render_dendrogram_svg, render_scatter_svg

from conftest import random_dataset


def quad_artifacts():
    data = Dataset(instances=np.array([[0.0], [1.0], [5.0], [6.0]]), kind="real")
    view = dissimilarity(data, "euclidean")
    it = build_it(view, compute_potentials(view, 1.0))
    return it, merge_table_fast(it)


class TestLeafOrder:
    def test_quad_order(self):
        _, z = quad_artifacts()
        # final merge (4,5): subtree 4 = {0,1}, subtree 5 = {2,3}
        assert leaf_order(z) == [0, 1, 2, 3]

    def test_single_leaf(self):
        assert leaf_order(MergeTable(n_leaves=1, rows=[])) == [0]

    def test_covers_all_leaves(self):
        data = random_dataset(21, n=64, d=2)
        view = dissimilarity(data, "euclidean")
        it = build_it(view, compute_potentials(view, 1.0))
        order = leaf_order(merge_table_fast(it))
        assert sorted(order) == list(range(64))


class TestDendrogramSvg:
    def test_quad_has_three_links(self):
        _, z = quad_artifacts()
        svg = render_dendrogram_svg(z)
        assert svg.count("<path") == 3

    def test_two_leaves_single_link(self):
        z = MergeTable(n_leaves=2, rows=[(0, 1, 2.0)])
        assert render_dendrogram_svg(z).count("<path") == 1

    def test_threshold_line_and_coloring(self):
        it, z = quad_artifacts()
        coloring = cut_threshold(it, 2.0)
        svg = render_dendrogram_svg(z, highlight=2.0, coloring=coloring)
        assert 'stroke-dasharray' in svg
        # two sub-dendrograms below the line use the first two palette colors,
        # the link above the line stays gray
        assert svg.count(f'stroke="{PALETTE[0]}"') == 1
        assert svg.count(f'stroke="{PALETTE[1]}"') == 1
        assert svg.count(f'stroke="{GRAY}"') == 1

    def test_uncolored_links_are_gray(self):
        _, z = quad_artifacts()
        assert render_dendrogram_svg(z).count(f'stroke="{GRAY}"') == 3

    def test_byte_identical_output(self):
        it, z = quad_artifacts()
        coloring = cut_threshold(it, 2.0)
        a = render_dendrogram_svg(z, highlight=2.0, coloring=coloring)
        b = render_dendrogram_svg(z, highlight=2.0, coloring=coloring)
        assert a.encode() == b.encode()

    def test_single_leaf_renders(self):
        svg = render_dendrogram_svg(MergeTable(n_leaves=1, rows=[]))
        assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")

    def test_large_tree_renders_every_link(self):
        data = random_dataset(8, n=300, d=2)
        view = dissimilarity(data, "euclidean")
        it = build_it(view, compute_potentials(view, 1.0))
        z = merge_table_fast(it)
        svg = render_dendrogram_svg(z)
        assert svg.count("<path") == 299  # no decimation at sub-pixel pitch


class TestScatterSvg:
    def test_point_count_and_determinism(self):
        data = random_dataset(13, n=50, d=2)
        svg = render_scatter_svg(data.instances)
        assert svg.count("<circle") == 50
        assert svg == render_scatter_svg(data.instances)

    def test_colored_by_assignment(self):
        data = Dataset(instances=np.array([[0.0, 0.0], [0.1, 0.0],
                                           [5.0, 5.0], [5.1, 5.0]]), kind="real")
        view = dissimilarity(data, "euclidean")
        it = build_it(view, compute_potentials(view, 1.0))
        coloring = cut_threshold(it, 1.0)
        svg = render_scatter_svg(data.instances, coloring)
        assert svg.count(f'fill="{PALETTE[0]}"') == 2
        assert svg.count(f'fill="{PALETTE[1]}"') == 2
