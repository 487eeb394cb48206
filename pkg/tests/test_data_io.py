import os

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from itdendro.data import Dataset, dissimilarity, load_categorical, load_real_csv
from itdendro.errors import FormatError, UsageError

from conftest import random_dataset

AGGREGATION_PATH = os.path.join(os.path.dirname(__file__), "..", "data",
                                "aggregation.csv")


def write(tmp_path, text, name="data.csv"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestLoadRealCsv:
    def test_three_line_file(self, tmp_path):
        ds = load_real_csv(write(tmp_path, "0,0\n1,0\n0,1"))
        assert ds.n == 3 and ds.d == 2
        assert ds.kind == "real"
        assert ds.labels is None
        np.testing.assert_array_equal(ds.instances, [[0, 0], [1, 0], [0, 1]])

    def test_row_order_preserved(self, tmp_path):
        ds = load_real_csv(write(tmp_path, "3,3\n1,1\n2,2"))
        np.testing.assert_array_equal(ds.instances[:, 0], [3, 1, 2])

    def test_label_column(self, tmp_path):
        ds = load_real_csv(write(tmp_path, "1,2,a\n3,4,b"), label_column=2)
        assert ds.labels == ["a", "b"]
        assert ds.d == 2

    def test_skip_header(self, tmp_path):
        ds = load_real_csv(write(tmp_path, "x,y\n1,2\n3,4"), skip_header=True)
        assert ds.n == 2

    def test_non_numeric_field_names_row_and_column(self, tmp_path):
        with pytest.raises(FormatError, match="row 1, column 2"):
            load_real_csv(write(tmp_path, "1,x"))

    def test_ragged_rows_name_the_line(self, tmp_path):
        with pytest.raises(FormatError, match="line 2"):
            load_real_csv(write(tmp_path, "1,2\n3\n4,5"))

    def test_non_finite_rejected(self, tmp_path):
        with pytest.raises(FormatError, match="non-finite"):
            load_real_csv(write(tmp_path, "1,inf"))

    def test_empty_file(self, tmp_path):
        with pytest.raises(FormatError, match="empty"):
            load_real_csv(write(tmp_path, ""))

    @pytest.mark.skipif(not os.path.exists(AGGREGATION_PATH),
                        reason="benchmark set not downloaded; see scripts/fetch_datasets.py")
    def test_aggregation_dimensions(self):
        ds = load_real_csv(AGGREGATION_PATH, label_column=2)
        assert ds.n == 788 and ds.d == 2


class TestLoadCategorical:
    def test_two_line_file(self, tmp_path):
        ds = load_categorical(write(tmp_path, "p,x,s\ne,x,y"), label_column=0)
        assert ds.n == 2 and ds.d == 2
        assert ds.kind == "categorical"
        assert ds.labels == ["p", "e"]

    def test_differing_row_lengths(self, tmp_path):
        with pytest.raises(FormatError, match="inconsistent token count"):
            load_categorical(write(tmp_path, "p,x,s\ne,x"), label_column=0)

    def test_empty_file(self, tmp_path):
        with pytest.raises(FormatError, match="empty"):
            load_categorical(write(tmp_path, ""), label_column=0)

    def test_no_label_column(self, tmp_path):
        ds = load_categorical(write(tmp_path, "a,b\nc,d"), label_column=None)
        assert ds.labels is None and ds.d == 2


class TestDissimilarity:
    def test_three_four_five(self):
        ds = Dataset(instances=np.array([[0.0, 0.0], [3.0, 4.0]]), kind="real")
        view = dissimilarity(ds, "euclidean")
        assert view.lookup(0, 1) == 5.0

    def test_hamming_single_mismatch(self):
        ds = Dataset(instances=np.array([["x", "s", "n"], ["x", "y", "n"]]),
                     kind="categorical")
        view = dissimilarity(ds, "hamming")
        assert view.lookup(0, 1) == 1.0

    def test_zero_diagonal(self):
        view = dissimilarity(random_dataset(7, n=40), "euclidean", "on-demand")
        assert all(view.lookup(i, i) == 0.0 for i in range(view.n))

    def test_metric_kind_mismatch(self):
        real = random_dataset(0, n=3)
        cat = Dataset(instances=np.array([["a"], ["b"]]), kind="categorical")
        with pytest.raises(UsageError):
            dissimilarity(real, "hamming")
        with pytest.raises(UsageError):
            dissimilarity(cat, "euclidean")

    @given(seed=st.integers(0, 2**32 - 1))
    @settings(max_examples=25, deadline=None)
    def test_modes_bitwise_identical(self, seed):
        ds = random_dataset(seed, n_max=60)
        mat = dissimilarity(ds, "euclidean", "materialized")
        lazy = dissimilarity(ds, "euclidean", "on-demand")
        for i in range(ds.n):
            ri, rj = mat.row(i), lazy.row(i)
            assert np.array_equal(ri, rj)  # bitwise: same kernel both modes

    @given(seed=st.integers(0, 2**32 - 1))
    @settings(max_examples=25, deadline=None)
    def test_symmetry_and_nonnegativity(self, seed):
        view = dissimilarity(random_dataset(seed, n_max=50), "euclidean")
        for i in range(view.n):
            row = view.row(i)
            assert (row >= 0).all()
            for j in range(view.n):
                assert view.lookup(i, j) == view.lookup(j, i)

    def test_hamming_range(self):
        rng = np.random.default_rng(3)
        toks = rng.choice(list("abcd"), size=(30, 6))
        ds = Dataset(instances=toks, kind="categorical")
        view = dissimilarity(ds, "hamming")
        for i in range(ds.n):
            row = view.row(i)
            assert np.array_equal(row, np.round(row))
            assert ((row >= 0) & (row <= ds.d)).all()

    @pytest.mark.parametrize("mode", ["materialized", "on-demand"])
    def test_exhaustive_symmetry_at_500(self, mode):
        view = dissimilarity(random_dataset(31, n=500, d=4), "euclidean", mode)
        matrix = np.vstack([view.row(i) for i in range(view.n)])
        assert np.array_equal(matrix, matrix.T)  # bitwise symmetric
        assert np.array_equal(np.diag(matrix), np.zeros(view.n))
        assert (matrix >= 0).all()
