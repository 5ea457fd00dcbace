""" Module to represent the partitions of n by their multiplicities """
import logging

from typing import Iterable

from sympy.utilities.iterables import partitions as sympy_partitions

from ..exceptions import DomainError, SizeGuardError

logger = logging.getLogger(__name__)

MAX_PARTITION_N = 30


class Partition(object):
    """ A partition of n as multiplicities (k_1, ..., k_n) with k_1 + 2k_2 + ... + n k_n = n """
    __slots__ = ('multiplicities',)

    def __init__(self, multiplicities: Iterable[int]):
        self.multiplicities: tuple[int, ...] = tuple(multiplicities)
        self.validate_required_fields(self.multiplicities)

    def __repr__(self):
        return f'Partition({"+".join(str(part) for part in self.parts)})'

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.multiplicities == other.multiplicities
        return NotImplemented

    def __hash__(self):
        return hash(self.multiplicities)

    @staticmethod
    def validate_required_fields(multiplicities: tuple[int, ...]) -> None:
        """
        Validate that the multiplicities are non-negative and weigh exactly n

        Args:
            multiplicities (tuple[int, ...]): k_1, ..., k_n

        Returns:
            None

        """
        if not multiplicities:
            raise DomainError("Expected Structural Error || a partition needs at least one multiplicity")

        if any(k < 0 for k in multiplicities):
            raise DomainError(f"Expected Structural Error || negative multiplicity in {multiplicities}")

        weight = sum(index * k for index, k in enumerate(multiplicities, start=1))
        if weight != len(multiplicities):
            raise DomainError(
                f"Expected Structural Error || multiplicities {multiplicities} weigh {weight}, "
                f"not {len(multiplicities)}")

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    @property
    def parts(self) -> list[int]:
        """ The parts in decreasing order """
        return [index for index in range(self.n, 0, -1) for _ in range(self.multiplicities[index - 1])]

    @property
    def length(self) -> int:
        """ Number of parts, k_1 + ... + k_n """
        return sum(self.multiplicities)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> 'Partition':
        """ Build a partition from its parts, e.g. [2, 1, 1] """
        parts = list(parts)
        multiplicities = [0] * sum(parts)
        for part in parts:
            multiplicities[part - 1] += 1

        return cls(multiplicities)


def partitions(n: int) -> list[Partition]:
    """
    Every partition of n, each once

    Args:
        n (int): 1 <= n <= 30

    Returns:
        list[Partition]: The partitions, from n itself down to 1 + 1 + ... + 1

    """
    if not 1 <= n <= MAX_PARTITION_N:
        raise SizeGuardError(f"Expected Size Error || partitions supports 1 <= n <= {MAX_PARTITION_N}, got {n}")

    result = []
    for counts in sympy_partitions(n):
        multiplicities = [0] * n
        for part, count in counts.items():
            multiplicities[part - 1] = count
        result.append(Partition(multiplicities))

    logger.debug('%d partitions of %d', len(result), n)

    return result
