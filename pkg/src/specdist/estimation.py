"""Nonparametric spectral estimation: periodogram and Welch averaging.

Estimates are evaluated directly at the grid nodes theta_k in [-pi, pi)
(not on the FFT's own bin layout), so they can be compared immediately
with analytic densities.  Estimated spectra may contain exact zeros for
contrived signals; those zeros are preserved and can legitimately produce
infinite distances downstream.  Nothing here floors a spectrum silently —
use Welch averaging (or floor explicitly) if that is not what you want.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EstimationError
from .grid import FrequencyGrid
from .spectra import Psd, psd_from_samples

__all__ = ["TimeSeries", "periodogram", "welch", "WINDOWS"]

WINDOWS = ("rectangular", "hann")

_MIN_SEGMENT = 8


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """A finite real signal (at least two samples) with an optional label."""

    samples: np.ndarray
    label: str | None = None

    def __post_init__(self):
        x = np.asarray(self.samples, dtype=float)
        if x.ndim != 1 or x.size < 2:
            raise ValueError("a time series needs a 1-d vector of at least 2 samples")
        if not np.all(np.isfinite(x)):
            bad = int(np.flatnonzero(~np.isfinite(x))[0])
            raise ValueError(f"samples[{bad}] = {x[bad]} is not finite")
        x.setflags(write=False)
        object.__setattr__(self, "samples", x)

    def __len__(self) -> int:
        return self.samples.size


def _transform_power(x: np.ndarray, n: int) -> np.ndarray:
    """|sum_t x_t e^{-i t theta_k}|^2 at the grid nodes theta_k = -pi + 2 pi k / n.

    Since e^{-i t theta_k} = (-1)^t e^{-2 pi i t k / n}, the sum equals an
    n-point DFT of the sign-alternated signal folded modulo n; the fold is
    exact for any signal length.
    """
    signed = x * np.where(np.arange(x.size) % 2, -1.0, 1.0)
    if signed.size <= n:
        folded = np.zeros(n)
        folded[: signed.size] = signed
    else:
        padded = np.zeros(-(-signed.size // n) * n)
        padded[: signed.size] = signed
        folded = padded.reshape(-1, n).sum(axis=0)
    return np.abs(np.fft.fft(folded)) ** 2


def periodogram(ts: TimeSeries, grid: FrequencyGrid) -> Psd:
    """Raw periodogram |DTFT|^2 / length evaluated at the grid nodes.

    When ``grid.n >= len(ts)`` the grid mean of the result equals the mean
    square of the signal, so total power is preserved.

    Raises
    ------
    EstimationError
        For the all-zero signal, whose estimate is not a valid density.
    """
    values = _transform_power(ts.samples, grid.n) / len(ts)
    try:
        return psd_from_samples(grid, values)
    except ValueError as exc:
        raise EstimationError(f"periodogram is not a valid density: {exc}") from exc


def _window(kind: str, length: int) -> np.ndarray:
    if kind == "rectangular":
        return np.ones(length)
    if kind == "hann":
        # periodic variant, appropriate for averaged spectral estimates
        return 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(length) / length)
    raise ValueError(f"unknown window {kind!r}; choose from {WINDOWS}")


def welch(
    ts: TimeSeries,
    segment: int,
    overlap: float,
    window: str,
    grid: FrequencyGrid,
) -> Psd:
    """Average of windowed segment periodograms.

    Each segment transform is normalized by the window energy sum(w^2), so
    a white-noise input of variance v estimates a flat density of level v
    regardless of the window.  Segments advance by
    ``hop = floor(segment * (1 - overlap))``, which must be at least 1.

    Parameters
    ----------
    segment : int
        Samples per segment; at least 8 and at most ``len(ts)``.
    overlap : float
        Fraction of a segment shared with its successor, in [0, 1).
    window : str
        ``"rectangular"`` or ``"hann"``.
    """
    segment = int(segment)
    if segment < _MIN_SEGMENT:
        raise ValueError(f"segment length must be >= {_MIN_SEGMENT}, got {segment}")
    if segment > len(ts):
        raise ValueError(
            f"segment length {segment} exceeds the series length {len(ts)}"
        )
    if not 0.0 <= overlap < 1.0:
        raise ValueError(f"overlap must lie in [0, 1), got {overlap}")
    hop = int(np.floor(segment * (1.0 - overlap)))
    if hop < 1:
        raise ValueError(
            f"overlap {overlap} leaves a hop of {hop} samples on a {segment}-sample "
            "segment; segments must advance by at least 1"
        )
    w = _window(window, segment)
    energy = float(w @ w)
    accum = np.zeros(grid.n)
    starts = range(0, len(ts) - segment + 1, hop)
    for start in starts:
        accum += _transform_power(w * ts.samples[start : start + segment], grid.n)
    values = accum / (len(starts) * energy)
    try:
        return psd_from_samples(grid, values)
    except ValueError as exc:
        raise EstimationError(f"Welch estimate is not a valid density: {exc}") from exc
