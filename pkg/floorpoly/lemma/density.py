""" Module with the density of {k u v} for independent uniform u, v and its Monte Carlo check """
import logging
import math

import mpmath
import numpy as np

from ..config import DEFAULTS
from ..exceptions import DomainError

logger = logging.getLogger(__name__)


def _check(k: int, t: float, closed: bool = False) -> None:
    if k < 1:
        raise DomainError(f"Expected Domain Error || the density needs k >= 1, got {k}")

    if not (0 <= t <= 1 if closed else 0 <= t < 1):
        raise DomainError(f"Expected Domain Error || t = {t} is outside [0, 1{']' if closed else ')'}")


def kxy_density(k: int, t: float) -> float:
    """
    Density of {k u v} at t: sum_{j=0}^{k-1} (1/k) ln(k / (j + t)), infinite at t = 0

    Args:
        k (int): k >= 1
        t (float): 0 <= t < 1

    Returns:
        float: The density value

    """
    _check(k, t)
    if t == 0:
        return math.inf

    return sum(math.log(k / (j + t)) for j in range(k)) / k


def _antiderivative(s: float) -> float:
    """ s ln s - s, continuous at 0 """
    return s * math.log(s) - s if s > 0 else 0.0


def kxy_cdf(k: int, t: float) -> float:
    """
    P({k u v} <= t), the integral of kxy_density from 0 to t

    Args:
        k (int): k >= 1
        t (float): 0 <= t <= 1

    Returns:
        float: The probability

    """
    _check(k, t, closed=True)

    total = 0.0
    for j in range(k):
        total += t * math.log(k) - (_antiderivative(j + t) - _antiderivative(j))

    return total / k


def density_integral(k: int) -> float:
    """ Integral of kxy_density over [0, 1) by tanh-sinh quadrature, which absorbs the log singularity at 0 """
    if k < 1:
        raise DomainError(f"Expected Domain Error || the density needs k >= 1, got {k}")

    with mpmath.workdps(30):
        value = mpmath.quad(lambda t: mpmath.fsum(mpmath.log(k / (j + t)) for j in range(k)) / k, [0, 1])

    return float(value)


class HistogramCheck(object):
    """ Observed bin counts of a Monte Carlo sample against the exact bin probabilities """
    def __init__(self, k: int, samples: int, seed: int, counts: np.ndarray, probabilities: np.ndarray):
        self.k: int = k
        self.samples: int = samples
        self.seed: int = seed
        self.counts: np.ndarray = counts
        self.expected: np.ndarray = samples * probabilities
        self.sigma: np.ndarray = np.sqrt(samples * probabilities * (1 - probabilities))

    def __repr__(self):
        return f'HistogramCheck(k={self.k}, bins={len(self.counts)}, max|z|={self.max_abs_z:.2f})'

    def __len__(self):
        return len(self.counts)

    @property
    def z_scores(self) -> np.ndarray:
        return (self.counts - self.expected) / self.sigma

    @property
    def max_abs_z(self) -> float:
        return float(np.max(np.abs(self.z_scores)))

    def fraction_within(self, sigmas: float) -> float:
        """ Share of bins whose count lies within `sigmas` standard deviations of the expectation """
        return float(np.mean(np.abs(self.z_scores) <= sigmas))

    def passed(self, sigmas: float = DEFAULTS.histogram_sigmas, share: float = DEFAULTS.histogram_bin_share,
               hard_limit: float = DEFAULTS.histogram_hard_limit) -> bool:
        """
        At least `share` of the bins within `sigmas`, and none beyond `hard_limit`. With share = 1 every bin
        must lie within `sigmas`.
        """
        return self.fraction_within(sigmas) >= share and self.max_abs_z <= hard_limit


def kxy_histogram_check(k: int, samples: int = 1_000_000, bins: int = DEFAULTS.histogram_bins,
                        seed: int = 0) -> HistogramCheck:
    """
    Histogram {k u v} for uniform u, v and set it against the bin probabilities from kxy_cdf

    Args:
        k (int): k >= 1
        samples (int): Number of (u, v) pairs
        bins (int): Equal-width bins over [0, 1)
        seed (int): Seed of the numpy generator

    Returns:
        HistogramCheck: Counts, expectations and z-scores per bin

    """
    if samples < 1 or bins < 1:
        raise DomainError(f"Expected Domain Error || need samples >= 1 and bins >= 1, got {samples}, {bins}")

    generator = np.random.default_rng(seed)
    u, v = generator.random(samples), generator.random(samples)
    values = np.mod(k * u * v, 1.0)
    counts, edges = np.histogram(values, bins=bins, range=(0.0, 1.0))
    cdf = np.array([kxy_cdf(k, float(edge)) for edge in edges])

    check = HistogramCheck(k, samples, seed, counts, np.diff(cdf))
    logger.info('density histogram k=%d: %.3f of bins within %.1f sigma, max |z| %.2f', k,
                check.fraction_within(DEFAULTS.histogram_sigmas), DEFAULTS.histogram_sigmas, check.max_abs_z)

    return check
