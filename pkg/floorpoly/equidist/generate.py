""" Module generating certified values of a SequenceSpec mod 1, sharded over the n-range """
import logging
import math

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional

import numpy as np

from ..config import DEFAULTS
from ..exact import Interval
from .sequence_spec import SequenceSpec

logger = logging.getLogger(__name__)

MIN_SHARD = 1_000


class UndecidedFloor(Exception):
    """ A floor or the final fractional part could not be decided at the current precision """


class GeneratedSequence(object):
    """ The certified values {value_n} in n order, with the indices n that could not be resolved """
    def __init__(self, spec: SequenceSpec, indices: np.ndarray, values: np.ndarray, unresolved: list[int]):
        self.spec: SequenceSpec = spec
        self.indices: np.ndarray = indices
        self.values: np.ndarray = values
        self.unresolved: list[int] = unresolved

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __repr__(self):
        return f'GeneratedSequence({self.spec.variant}, resolved={len(self)}, unresolved={len(self.unresolved)})'

    @property
    def unresolved_count(self) -> int:
        return len(self.unresolved)

    def prefix(self, count: int) -> np.ndarray:
        """ The resolved values with n <= count """
        return self.values[self.indices <= count]


def interval_floor(interval: Interval) -> int:
    value = interval.floor()
    if value is None:
        raise UndecidedFloor()

    return value


def chain_enclosure(scaled: Interval, k: int) -> Interval:
    """ (alpha n)^{:k} from an enclosure of alpha n """
    value = scaled
    for _ in range(k - 1):
        value = scaled * interval_floor(value)

    return value


def point_enclosure(spec: SequenceSpec, n: int, precision: int) -> Interval:
    """
    Enclosure of value_n built from alpha enclosures at the given precision

    Args:
        spec (SequenceSpec): The sequence
        n (int): Index, n >= 1
        precision (int): Bits of every alpha enclosure

    Returns:
        Interval: Contains value_n, raises UndecidedFloor when an inner floor straddles an integer

    """
    alphas = [alpha().enclosure(precision) for alpha in spec.alphas]

    if spec.variant == SequenceSpec.POWER_CHAIN:
        return chain_enclosure(alphas[0] * n, spec.k)

    if spec.variant == SequenceSpec.THEOREM_COMBINATION:
        # (alpha n)^{:1} is alpha n itself, so m (alpha n) - m (alpha n) vanishes
        if spec.k == 1:
            return Interval(0)
        power = (alphas[0] ** spec.k) * (n ** spec.k)
        return power * spec.m - chain_enclosure(alphas[0] * n, spec.k) * (spec.k * spec.m)

    if spec.variant == SequenceSpec.NESTED_ALPHA:
        value = alphas[-1] * n
        for alpha in reversed(alphas[:-1]):
            value = alpha * n * interval_floor(value)
        return value

    value = alphas[0]
    for alpha in alphas[1:]:
        value = value * interval_floor(alpha * n)

    return value


def fractional_enclosure(spec: SequenceSpec, n: int, precision: int) -> Interval:
    """ Enclosure of {value_n}, raises UndecidedFloor when value_n straddles an integer """
    enclosure = point_enclosure(spec, n, precision)
    return enclosure - interval_floor(enclosure)


def certified_fraction(spec: SequenceSpec, n: int) -> Optional[Interval]:
    """
    Enclosure of {value_n} no wider than 2^-value_bits, refining by doubling the precision from
    precision_start up to precision_cap

    Args:
        spec (SequenceSpec): The sequence
        n (int): Index, n >= 1

    Returns:
        Optional[Interval]: The enclosure, None when it cannot be certified at the cap

    """
    tolerance = Fraction(1, 1 << spec.value_bits)
    precision = spec.precision_start
    while True:
        try:
            enclosure = fractional_enclosure(spec, n, precision)
            if enclosure.width <= tolerance:
                return enclosure
        except UndecidedFloor:
            pass

        if precision * 2 > spec.precision_cap:
            return None

        precision *= 2


def _to_float(enclosure: Interval) -> float:
    value = float((enclosure.lo + enclosure.hi) / 2)
    return min(value, math.nextafter(1.0, 0.0))


def _generate_range(spec: SequenceSpec, start: int, stop: int) -> tuple[list[int], list[float], list[int]]:
    indices, values, unresolved = [], [], []
    for n in range(start, stop):
        enclosure = certified_fraction(spec, n)
        if enclosure is None:
            logger.debug('skipping n=%d of %r: unresolvable at %d bits', n, spec, spec.precision_cap)
            unresolved.append(n)
            continue

        indices.append(n)
        values.append(_to_float(enclosure))

    logger.debug('generated n in [%d, %d) of %r', start, stop, spec)

    return indices, values, unresolved


def generate(spec: SequenceSpec, jobs: int = DEFAULTS.jobs) -> GeneratedSequence:
    """
    Certified values {value_n} for n = 1..N. Points whose floors cannot be decided at the precision cap
    are skipped and counted, never guessed.

    Args:
        spec (SequenceSpec): The sequence
        jobs (int): Worker processes; shards are merged in n order, so the result does not depend on it

    Returns:
        GeneratedSequence: The values and the unresolved indices

    """
    if jobs > 1 and spec.N >= 2 * MIN_SHARD:
        size = max(MIN_SHARD, math.ceil(spec.N / (4 * jobs)))
        bounds = [(start, min(start + size, spec.N + 1)) for start in range(1, spec.N + 1, size)]
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            shards = list(executor.map(_generate_range, [spec] * len(bounds), *zip(*bounds)))
    else:
        shards = [_generate_range(spec, 1, spec.N + 1)]

    indices = np.array([n for shard in shards for n in shard[0]], dtype=np.int64)
    values = np.array([value for shard in shards for value in shard[1]], dtype=np.float64)
    unresolved = [n for shard in shards for n in shard[2]]

    logger.info('generated %d values of %r, %d unresolved', len(values), spec, len(unresolved))

    return GeneratedSequence(spec, indices, values, unresolved)
