"""Log-geometric interpolation between densities.

The minimal-length path between two densities at finite distance is the
pointwise interpolant f_tau = f0^(1-tau) * f1^tau.  Distance accumulates
proportionally along it — d(f0, f_tau) = tau * d(f0, f1) — so the summed
length of any discretization reproduces the endpoint distance and the
metric is intrinsic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .divergences import geodesic_distance
from .errors import NoFiniteGeodesicError
from .spectra import Psd, _require_same_grid, psd_from_samples

__all__ = ["GeodesicPath", "geodesic_point", "geodesic_path", "path_length"]


@dataclass(frozen=True, eq=False)
class GeodesicPath:
    """Snapshots of the log-geometric interpolant at increasing tau values.

    ``taus`` always includes both endpoints 0 and 1; ``points[i]`` is the
    interpolant at ``taus[i]`` and recomputable from the endpoints.
    """

    endpoints: tuple[Psd, Psd]
    taus: np.ndarray
    points: tuple[Psd, ...]


def geodesic_point(f0: Psd, f1: Psd, tau: float) -> Psd:
    """Interpolant f0^(1-tau) * f1^tau at a single tau in [0, 1].

    Shared zeros of the endpoints stay zero along the whole path.
    Extrapolation (tau outside [0, 1]) is refused: the formula would
    evaluate, but the result can leave numerical range silently.

    Raises
    ------
    NoFiniteGeodesicError
        If the endpoint zero sets differ (the endpoints are infinitely far
        apart, so no finite path connects them).
    """
    _require_same_grid(f0, f1)
    tau = float(tau)
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau} (extrapolation refused)")
    if f0.zero_set != f1.zero_set:
        raise NoFiniteGeodesicError(
            "endpoints vanish on different sets; they are infinitely far apart"
        )
    if tau == 0.0:
        return f0
    if tau == 1.0:
        return f1
    values = f0.values ** (1.0 - tau) * f1.values**tau
    return psd_from_samples(f0.grid, values)


def geodesic_path(f0: Psd, f1: Psd, m: int) -> GeodesicPath:
    """Path sampled at the m uniform parameters tau_k = k/(m-1), m >= 2."""
    m = int(m)
    if m < 2:
        raise ValueError(f"a path needs at least its 2 endpoints, got m = {m}")
    taus = np.arange(m) / (m - 1)
    taus.setflags(write=False)
    points = tuple(geodesic_point(f0, f1, t) for t in taus)
    return GeodesicPath(endpoints=(f0, f1), taus=taus, points=points)


def path_length(path: GeodesicPath) -> float:
    """Sum of geodesic distances over consecutive path points.

    Every segment is finite by construction, and the total reproduces the
    endpoint distance regardless of how finely the path is sampled.
    """
    return sum(
        geodesic_distance(a, b) for a, b in zip(path.points[:-1], path.points[1:])
    )
