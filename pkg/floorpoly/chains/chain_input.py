""" Module to represent the cyclic sequence (x_0, ..., x_{n-1}) that nested floor chains run over """
from fractions import Fraction
from typing import Iterable, Union

from ..exact import AdaptiveReal
from ..exceptions import DomainError

Number = Union[int, Fraction, AdaptiveReal]


class ChainInput(object):
    """ Class to represent a cyclic sequence of chain entries, where entry(n + j) is entry(j) """
    def __init__(self, entries: Iterable[Number]):
        self.entries: tuple[Number, ...] = tuple(self.__coerce(entry) for entry in entries)

        if not self.entries:
            raise DomainError("Expected Structural Error || a ChainInput needs at least one entry")

    def __getitem__(self, index: int) -> Number:
        return self.entries[index % len(self.entries)]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return f'ChainInput({", ".join(str(entry) for entry in self.entries)})'

    @property
    def n(self) -> int:
        """ Length of the cycle """
        return len(self.entries)

    @property
    def is_exact(self) -> bool:
        """ True when every entry is an int or Fraction """
        return all(isinstance(entry, Fraction) for entry in self.entries)

    @classmethod
    def constant(cls, value: Number, n: int) -> 'ChainInput':
        """ The sequence (x, x, ..., x) of length n """
        return cls([value] * n)

    @staticmethod
    def __coerce(entry: Number) -> Number:
        if isinstance(entry, AdaptiveReal):
            return entry.rational_value if entry.is_rational else entry

        if isinstance(entry, (int, Fraction)):
            return Fraction(entry)

        raise TypeError(f"Expected Structural Error || chain entries must be int, Fraction or AdaptiveReal, "
                        f"got {type(entry).__name__}")
