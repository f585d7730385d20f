import numpy as np
import pytest

from specdist import make_grid, psd_constant, psd_from_ar, psd_from_samples


@pytest.fixture(scope="session")
def grid64():
    return make_grid(64)


@pytest.fixture(scope="session")
def grid1024():
    return make_grid(1024)


@pytest.fixture(scope="session")
def grid4096():
    return make_grid(4096)


@pytest.fixture(scope="session")
def flat_one(grid4096):
    return psd_constant(grid4096, 1.0)


@pytest.fixture(scope="session")
def expcos(grid4096):
    return psd_from_samples(grid4096, np.exp(np.cos(grid4096.nodes)))


@pytest.fixture(scope="session")
def expcos2(grid4096):
    return psd_from_samples(grid4096, np.exp(2.0 * np.cos(grid4096.nodes)))


@pytest.fixture(scope="session")
def ar_half(grid4096):
    return psd_from_ar([0.5], 1.0, grid4096)


def random_positive_spectrum(rng, grid, degree=8):
    """Strictly positive trigonometric polynomial of bounded degree.

    The harmonic amplitudes sum to at most 90% of the constant offset, so
    positivity holds everywhere, not just at the nodes.
    """
    offset = float(np.exp(rng.uniform(-2.0, 2.0)))
    a = rng.normal(size=degree)
    b = rng.normal(size=degree)
    budget = rng.uniform(0.1, 0.9) * offset
    scale = budget / (np.abs(a).sum() + np.abs(b).sum())
    k = np.arange(1, degree + 1)
    values = offset + (scale * a) @ np.cos(np.outer(k, grid.nodes)) + (
        scale * b
    ) @ np.sin(np.outer(k, grid.nodes))
    return psd_from_samples(grid, values)


def psd_with_zero_at(grid, index, base=1.0):
    values = np.full(grid.n, float(base))
    values[index] = 0.0
    return psd_from_samples(grid, values)
