""" Module to represent points of [0, 1)^(k-1) and the bar values built from them """
import math

from fractions import Fraction
from typing import Iterable, Union

from ..exceptions import DomainError

Real = Union[int, Fraction, float]


class FracVector(object):
    """ Class to represent (y_1, ..., y_{k-1}) with every component in [0, 1) """
    def __init__(self, values: Iterable[Real]):
        self.values: tuple[Real, ...] = tuple(Fraction(value) if isinstance(value, int) else value
                                             for value in values)
        self.validate_required_fields(self.values)

    def __getitem__(self, index: int) -> Real:
        return self.values[index]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return f'FracVector({", ".join(str(value) for value in self.values)})'

    @staticmethod
    def validate_required_fields(values: tuple[Real, ...]) -> None:
        """
        Validate that every component lies in [0, 1)

        Args:
            values (tuple[Real, ...]): The components

        Returns:
            None

        """
        for index, value in enumerate(values, start=1):
            if not 0 <= value < 1:
                raise DomainError(f"Expected Domain Error || y_{index} = {value} is outside [0, 1)")

    def y(self, j: int) -> Real:
        """ y_j, 1-based """
        return self.values[j - 1]

    def prefix(self, length: int) -> 'FracVector':
        """ (y_1, ..., y_length) """
        return FracVector(self.values[:length])

    @property
    def is_exact(self) -> bool:
        return all(isinstance(value, Fraction) for value in self.values)


class BarValues(object):
    """ The fractional parts a-bar_j and the floor sums b-bar_j for j = 1, ..., k-1 """
    def __init__(self, k: int, l: int, a_bar: list[Real], b_bar: list[int]):
        self.validate_required_fields(k, l, a_bar, b_bar)
        self.k: int = k
        self.l: int = l
        self.a_bar: list[Real] = a_bar
        self.b_bar: list[int] = b_bar

    def __repr__(self):
        return f'BarValues(k={self.k}, l={self.l}, a_bar={self.a_bar}, b_bar={self.b_bar})'

    def __len__(self):
        return len(self.a_bar)

    @staticmethod
    def validate_required_fields(k: int, l: int, a_bar: list[Real], b_bar: list[int]) -> None:
        """
        Validate a_bar_j in [0, 1) and b_bar_j in {0, ..., k! l / j! - 1}

        Args:
            k (int): Depth
            l (int): Scale
            a_bar (list[Real]): Fractional parts
            b_bar (list[int]): Floor sums

        Returns:
            None

        """
        if len(a_bar) != k - 1 or len(b_bar) != k - 1:
            raise DomainError(f"Expected Structural Error || bar values for k={k} need {k - 1} components each")

        for j in range(1, k):
            scale = math.factorial(k) * l // math.factorial(j)
            if not 0 <= a_bar[j - 1] < 1:
                raise DomainError(f"Expected Structural Error || a_bar_{j} = {a_bar[j - 1]} is outside [0, 1)")
            if not 0 <= b_bar[j - 1] <= scale - 1:
                raise DomainError(f"Expected Structural Error || b_bar_{j} = {b_bar[j - 1]} is outside "
                                  f"0..{scale - 1}")
