""" Module with the reduced form g_k and Monte Carlo estimates of |E exp(2 pi i X)| for it """
import logging
import math

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from ..config import DEFAULTS
from ..exceptions import DomainError
from ..partition import PartitionPolynomial, p_hat
from .frac_vector import FracVector, Real

logger = logging.getLogger(__name__)

STATISTICS = ('g', 'p_hat', 'uniform')
MIN_WITNESS_SAMPLES = 100_000


def g_pairs(k: int) -> list[tuple[int, int, Fraction]]:
    """ The terms (i, j, c) of g_k / m as c y_i y_j: c = k for i < j = k - i, and k/2 for i = j = k/2 """
    pairs = [(i, k - i, Fraction(k)) for i in range(1, k) if i < k - i]
    if k % 2 == 0:
        pairs.append((k // 2, k // 2, Fraction(k, 2)))

    return pairs


def g_k(k: int, m: int, y: Union[FracVector, Iterable[Real]]) -> Real:
    """
    mk y_1 y_{k-1} + mk y_2 y_{k-2} + ... + (m/2) k y_{k/2}^2, the last term only for even k

    Args:
        k (int): k >= 2
        m (int): Multiplier
        y (Union[FracVector, Iterable[Real]]): k - 1 values in [0, 1)

    Returns:
        Real: g_k(y), exact for Fraction input

    """
    y = y if isinstance(y, FracVector) else FracVector(y)
    if k < 2:
        raise DomainError(f"Expected Domain Error || g_k needs k >= 2, got {k}")

    if len(y) != k - 1:
        raise DomainError(f"Expected Domain Error || g_{k} takes {k - 1} arguments, got {len(y)}")

    total = Fraction(0)
    for i, j, coefficient in g_pairs(k):
        total += m * coefficient * y.y(i) * y.y(j)

    return total


class WitnessEstimate(object):
    """ Estimate of |E exp(2 pi i X)| with a 3 sigma confidence radius """
    def __init__(self, k: int, m: int, statistic: str, samples: int, seed: int, estimate: float, radius: float):
        self.k: int = k
        self.m: int = m
        self.statistic: str = statistic
        self.samples: int = samples
        self.seed: int = seed
        self.estimate: float = estimate
        self.radius: float = radius

    def __repr__(self):
        return f'WitnessEstimate({self.statistic}, k={self.k}, m={self.m}, {self.estimate:.5f} +- {self.radius:.5f})'

    @property
    def witnesses_nonuniformity(self) -> bool:
        """ True when the estimate exceeds its confidence radius """
        return self.estimate - self.radius > 0

    def to_dict(self) -> dict:
        return dict(k=self.k, m=self.m, statistic=self.statistic, samples=self.samples, seed=self.seed,
                    estimate=self.estimate, radius=self.radius,
                    witnesses_nonuniformity=self.witnesses_nonuniformity)


def _evaluate_polynomial(polynomial: PartitionPolynomial, arrays: list[np.ndarray]) -> np.ndarray:
    total = np.zeros_like(arrays[0])
    for monomial in polynomial:
        term = np.full_like(arrays[0], float(polynomial.coefficient(monomial)))
        for _, index, exponent in monomial:
            term *= arrays[index - 1] ** exponent
        total += term

    return total


def _statistic(k: int, m: int, statistic: str, uniforms: np.ndarray) -> np.ndarray:
    columns = list(uniforms)
    if statistic == 'uniform':
        return columns[0]

    if statistic == 'p_hat':
        return m * _evaluate_polynomial(p_hat(k), columns)

    total = np.zeros_like(columns[0])
    for i, j, coefficient in g_pairs(k):
        total += m * float(coefficient) * columns[i - 1] * columns[j - 1]

    return total


def _shard_sums(k: int, m: int, statistic: str, size: int, seed: np.random.SeedSequence) -> np.ndarray:
    generator = np.random.default_rng(seed)
    uniforms = generator.random((k - 1, size))
    angles = 2 * math.pi * np.mod(_statistic(k, m, statistic, uniforms), 1.0)
    cosines, sines = np.cos(angles), np.sin(angles)

    return np.array([cosines.sum(), sines.sum(), (cosines ** 2).sum(), (sines ** 2).sum()])


def fourier_witness(k: int, m: int = 1, samples: int = 1_000_000, seed: int = 0, statistic: str = 'g',
                    shard: int = DEFAULTS.witness_shard, jobs: int = DEFAULTS.jobs) -> WitnessEstimate:
    """
    Estimate |E exp(2 pi i X)| for X = g_k(Y) (statistic 'g'), X = m p_hat_k(a) (statistic 'p_hat') or
    X = Y_1 (statistic 'uniform'), with Y and a independent uniform deviates. A uniform X has expectation 0,
    so an estimate above its radius witnesses nonuniformity.

    Samples are drawn in shards of `shard` points with seeds spawned from `seed`, so the result does not
    depend on `jobs`.

    Args:
        k (int): k >= 3 for 'g' and 'p_hat', k >= 2 for 'uniform'
        m (int): Multiplier, m >= 1
        samples (int): Number of samples, at least 100000
        seed (int): Master seed
        statistic (str): One of STATISTICS
        shard (int): Samples per shard
        jobs (int): Worker processes

    Returns:
        WitnessEstimate: The estimate and its 3 sigma radius

    """
    if statistic not in STATISTICS:
        raise DomainError(f"Expected Domain Error || unknown statistic `{statistic}`, expected one of {STATISTICS}")

    minimum = 2 if statistic == 'uniform' else 3
    if k < minimum or m < 1:
        raise DomainError(f"Expected Domain Error || fourier_witness `{statistic}` needs k >= {minimum} and m >= 1, "
                          f"got k={k}, m={m}")

    if samples < MIN_WITNESS_SAMPLES:
        raise DomainError(f"Expected Domain Error || fourier_witness needs at least {MIN_WITNESS_SAMPLES} samples, "
                          f"got {samples}")

    sizes = [min(shard, samples - start) for start in range(0, samples, shard)]
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    arguments = [(k, m, statistic, size, shard_seed) for size, shard_seed in zip(sizes, seeds)]

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            partials = list(executor.map(_shard_sums, *zip(*arguments)))
    else:
        partials = [_shard_sums(*argument) for argument in arguments]

    cos_sum, sin_sum, cos_squares, sin_squares = np.sum(partials, axis=0)
    mean_cos, mean_sin = cos_sum / samples, sin_sum / samples
    variance = (cos_squares / samples - mean_cos ** 2) + (sin_squares / samples - mean_sin ** 2)
    radius = 3 * math.sqrt(max(variance, 0.0) / samples)
    estimate = math.hypot(mean_cos, mean_sin)

    logger.info('witness %s k=%d m=%d: %.6f +- %.6f over %d samples', statistic, k, m, estimate, radius, samples)

    return WitnessEstimate(k, m, statistic, samples, seed, float(estimate), float(radius))
