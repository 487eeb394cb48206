import numpy as np
import pytest

from itdendro.data import Dataset, dissimilarity


def random_dataset(seed: int, n: int | None = None, d: int | None = None,
                   n_max: int = 300, d_max: int = 8) -> Dataset:
    rng = np.random.default_rng(seed)
    if n is None:
        n = int(rng.integers(1, n_max + 1))
    if d is None:
        d = int(rng.integers(1, d_max + 1))
    pts = rng.uniform(0.0, 10.0, size=(n, d))
    return Dataset(instances=pts, kind="real", name=f"random-{seed}")


def random_view(seed: int, n: int | None = None, d: int | None = None,
                mode: str = "materialized"):
    return dissimilarity(random_dataset(seed, n, d), "euclidean", mode)


@pytest.fixture
def quad_view():
    """1-D points {0, 1, 5, 6}: the worked 4-point example."""
    data = Dataset(instances=np.array([[0.0], [1.0], [5.0], [6.0]]), kind="real")
    return dissimilarity(data, "euclidean", "materialized")
