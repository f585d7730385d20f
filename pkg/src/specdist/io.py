"""CSV persistence: PSD files, time-series files, distance matrices.

PSD file format: header ``theta,psd``, rows ``<theta>,<value>`` with theta
ascending from -pi (inclusive) on a uniform grid whose final node stays
below pi.  Values are written with 17 significant digits so a write/read
round trip is bitwise lossless.  Distance matrices carry their labels in
the first row and column; infinite entries use the literal ``inf``.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .divergences import geodesic_distance
from .errors import CsvParseError, InvalidGridError, NegativeDensityError
from .estimation import TimeSeries
from .grid import make_grid
from .spectra import Psd, psd_from_samples

__all__ = [
    "DistanceMatrix",
    "read_psd_csv",
    "write_psd_csv",
    "read_timeseries_csv",
    "build_distance_matrix",
    "write_distance_matrix_csv",
    "format_scalar",
]

PSD_HEADER = ("theta", "psd")

# Relative spacing jitter allowed before a frequency column is rejected.
_SPACING_RTOL = 1e-9

# Significant digits: full double precision in PSD files, display precision
# in distance matrices and on stdout.
_PSD_DIGITS = 17
_RESULT_DIGITS = 12


def format_scalar(x: float) -> str:
    """Render a result with 12 significant digits; infinities as ``inf``."""
    return f"{float(x):.{_RESULT_DIGITS}g}"


def write_psd_csv(psd: Psd, path) -> None:
    """Write ``theta,psd`` rows at full double precision, LF-terminated.

    ``path`` may also be an open text stream (e.g. stdout).
    """
    if hasattr(path, "write"):
        _write_psd_rows(psd, path)
    else:
        with open(path, "w", newline="") as fh:
            _write_psd_rows(psd, fh)


def _write_psd_rows(psd: Psd, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(PSD_HEADER)
    for theta, value in zip(psd.grid.nodes, psd.values):
        writer.writerow([f"{theta:.{_PSD_DIGITS}g}", f"{value:.{_PSD_DIGITS}g}"])


def read_psd_csv(path) -> Psd:
    """Read a PSD file back, validating the grid it claims to live on.

    Raises
    ------
    CsvParseError
        Malformed header or row (message carries the 1-based line number).
    NegativeDensityError
        A negative sample (with its line number).
    InvalidGridError
        Frequency column that is not uniform from -pi at 1e-9 relative
        tolerance.
    """
    thetas: list[float] = []
    values: list[float] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [c.strip() for c in header] != list(PSD_HEADER):
            raise CsvParseError(
                f"{path}: line 1: expected header 'theta,psd', got {header!r}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise CsvParseError(
                    f"{path}: line {lineno}: expected 2 fields, got {len(row)}"
                )
            try:
                theta = float(row[0])
                value = float(row[1])
            except ValueError:
                raise CsvParseError(
                    f"{path}: line {lineno}: non-numeric field in {row!r}"
                ) from None
            if not (math.isfinite(theta) and math.isfinite(value)):
                raise CsvParseError(f"{path}: line {lineno}: non-finite field")
            if value < 0.0:
                raise NegativeDensityError(
                    f"{path}: line {lineno}: negative density value {value}"
                )
            thetas.append(theta)
            values.append(value)
    n = len(thetas)
    if n < 2:
        raise CsvParseError(f"{path}: a PSD file needs at least 2 data rows, got {n}")
    grid = make_grid(n)
    spacing = np.diff(thetas)
    if np.any(np.abs(spacing - grid.spacing) > _SPACING_RTOL * grid.spacing):
        raise InvalidGridError(
            f"{path}: frequency column is not uniform with spacing 2*pi/{n}"
        )
    if abs(thetas[0] + math.pi) > _SPACING_RTOL * grid.spacing:
        raise InvalidGridError(
            f"{path}: frequency column must start at -pi, got {thetas[0]!r}"
        )
    return psd_from_samples(grid, values)


def read_timeseries_csv(path) -> TimeSeries:
    """Read a signal from a ``t,value`` or single ``value`` column file."""
    samples: list[float] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise CsvParseError(f"{path}: empty file")
        cols = [c.strip() for c in header]
        if cols == ["t", "value"]:
            value_index = 1
        elif cols == ["value"]:
            value_index = 0
        else:
            raise CsvParseError(
                f"{path}: line 1: expected header 't,value' or 'value', got {header!r}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != value_index + 1:
                raise CsvParseError(
                    f"{path}: line {lineno}: expected {value_index + 1} fields, got {len(row)}"
                )
            try:
                samples.append(float(row[value_index]))
            except ValueError:
                raise CsvParseError(
                    f"{path}: line {lineno}: non-numeric value {row[value_index]!r}"
                ) from None
    try:
        return TimeSeries(samples=np.asarray(samples), label=Path(path).stem)
    except ValueError as exc:
        raise CsvParseError(f"{path}: {exc}") from exc


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric pairwise geodesic distances with a zero diagonal.

    Off-diagonal entries may be ``inf`` (pairs with differing zero sets);
    that is data, not an error.
    """

    labels: tuple[str, ...]
    entries: np.ndarray


def build_distance_matrix(
    spectra: Sequence[Psd], labels: Sequence[str], jobs: int = 1
) -> DistanceMatrix:
    """Geodesic distances between all pairs, each unordered pair computed once.

    ``jobs > 1`` evaluates pairs on a thread pool; results are written into
    the matrix by index, so the output is identical for any schedule.
    """
    if len(spectra) != len(labels):
        raise ValueError(
            f"{len(spectra)} spectra but {len(labels)} labels"
        )
    k = len(spectra)
    entries = np.zeros((k, k))
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]

    def one(pair):
        i, j = pair
        return geodesic_distance(spectra[i], spectra[j])

    if jobs > 1 and pairs:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            distances = list(pool.map(one, pairs))
    else:
        distances = [one(p) for p in pairs]
    for (i, j), d in zip(pairs, distances):
        entries[i, j] = entries[j, i] = d
    entries.setflags(write=False)
    return DistanceMatrix(labels=tuple(labels), entries=entries)


def write_distance_matrix_csv(matrix: DistanceMatrix, path) -> None:
    """Write the labeled matrix; ``inf`` is the literal for infinite entries."""
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["", *matrix.labels])
            for label, row in zip(matrix.labels, matrix.entries):
                writer.writerow([label, *(format_scalar(x) for x in row)])
    except OSError as exc:
        raise OSError(f"cannot write distance matrix to {path}: {exc}") from exc
