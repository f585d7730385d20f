"""Uniform frequency grid on [-pi, pi) and normalized quadrature.

Every integral in this package is taken against the normalized measure
dtheta/(2*pi), so on the uniform grid it reduces to a plain average of the
samples.  For 2*pi-periodic integrands the left-endpoint rule coincides
with the trapezoid rule and is spectrally accurate: trigonometric
polynomials of degree d integrate exactly once n > 2d.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["FrequencyGrid", "make_grid", "mean", "central_variance"]


@dataclass(frozen=True, eq=False)
class FrequencyGrid:
    """Uniform angles theta_k = -pi + 2*pi*k/n for k = 0..n-1, weight 1/n each.

    The weights sum to one, so summing samples*weight approximates the
    normalized integral over [-pi, pi).  Grids compare equal iff they have
    the same node count; nodes are a pure function of ``n``.
    """

    n: int
    nodes: np.ndarray

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FrequencyGrid) and self.n == other.n

    def __hash__(self) -> int:
        return hash(self.n)

    @property
    def weight(self) -> float:
        return 1.0 / self.n

    @property
    def spacing(self) -> float:
        return 2.0 * np.pi / self.n


def make_grid(n: int) -> FrequencyGrid:
    """Build the uniform n-node grid on [-pi, pi).

    Parameters
    ----------
    n : int
        Number of nodes, at least 2.

    Returns
    -------
    FrequencyGrid
    """
    n = int(n)
    if n < 2:
        raise ValueError(f"grid needs at least 2 nodes, got {n}")
    nodes = -np.pi + (2.0 * np.pi / n) * np.arange(n)
    nodes.setflags(write=False)
    return FrequencyGrid(n=n, nodes=nodes)


def _as_samples(grid: FrequencyGrid, samples, name: str = "samples") -> np.ndarray:
    x = np.asarray(samples, dtype=float)
    if x.ndim != 1 or x.shape[0] != grid.n:
        raise ValueError(
            f"{name} must be a vector of length {grid.n}, got shape {x.shape}"
        )
    if not np.all(np.isfinite(x)):
        bad = int(np.flatnonzero(~np.isfinite(x))[0])
        raise ValueError(f"{name}[{bad}] = {x[bad]} is not finite")
    return x


def mean(grid: FrequencyGrid, samples) -> float:
    """Quadrature for the normalized integral of ``samples`` over the grid.

    Equals the arithmetic average (1/n) * sum(samples).
    """
    return float(np.mean(_as_samples(grid, samples)))


def central_variance(grid: FrequencyGrid, samples) -> float:
    """mean(samples^2) - mean(samples)^2, evaluated in centered form.

    Computed as mean((samples - mean)^2): the same value, but without the
    catastrophic cancellation of the two-term difference, which matters
    because near-constant sample vectors (proportional densities) must come
    out at variance ~0 rather than at the subtraction's rounding residue.
    The centered form is a mean of squares, so the result is nonnegative by
    construction; a negative value can only mean memory corruption and is
    still guarded.
    """
    x = _as_samples(grid, samples)
    centered = x - float(np.mean(x))
    var = float(np.mean(centered * centered))
    if var < 0.0:
        raise RuntimeError(f"variance {var} negative; internal inconsistency")
    return var
