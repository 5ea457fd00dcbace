""" Module with the one-dimensional measures of uniformity: star discrepancy, Weyl sums and histograms """
from typing import Iterable, Union

import numpy as np

from ..config import DEFAULTS
from ..exceptions import DomainError

Points = Union[np.ndarray, Iterable[float]]


def _as_points(points: Points) -> np.ndarray:
    points = np.asarray(points if isinstance(points, np.ndarray) else list(points), dtype=np.float64)
    if points.size == 0:
        raise DomainError("Expected Domain Error || the point set is empty")

    if np.any(points < 0) or np.any(points >= 1):
        raise DomainError("Expected Domain Error || every point must lie in [0, 1)")

    return points


def star_discrepancy(points: Points) -> float:
    """
    Exact star discrepancy of points in [0, 1): with x_(1) <= ... <= x_(N) sorted,
    max over i of max(i/N - x_(i), x_(i) - (i-1)/N)

    Args:
        points (Points): Values in [0, 1)

    Returns:
        float: D*_N in (0, 1]

    """
    ordered = np.sort(_as_points(points))
    count = len(ordered)
    ranks = np.arange(1, count + 1, dtype=np.float64)

    return float(max(np.max(ranks / count - ordered), np.max(ordered - (ranks - 1) / count)))


def weyl_sums(points: Points, H: int = DEFAULTS.weyl_harmonics) -> list[float]:
    """
    |(1/N) sum_n exp(2 pi i h x_n)| for h = 1..H

    Args:
        points (Points): Values in [0, 1)
        H (int): Number of harmonics, H >= 1

    Returns:
        list[float]: One magnitude per harmonic

    """
    if H < 1:
        raise DomainError(f"Expected Domain Error || need at least one harmonic, got H={H}")

    points = _as_points(points)
    magnitudes = []
    for h in range(1, H + 1):
        angles = 2 * np.pi * h * points
        magnitudes.append(min(1.0, float(np.hypot(np.cos(angles).mean(), np.sin(angles).mean()))))

    return magnitudes


def histogram(points: Points, bins: int = DEFAULTS.histogram_bins) -> list[int]:
    """ Counts of the points in `bins` equal-width bins over [0, 1) """
    if bins < 1:
        raise DomainError(f"Expected Domain Error || need at least one bin, got {bins}")

    counts, _ = np.histogram(_as_points(points), bins=bins, range=(0.0, 1.0))

    return [int(count) for count in counts]
