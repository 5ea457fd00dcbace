""" Module to represent a closed interval with exact rational endpoints """
import math

from fractions import Fraction
from typing import Optional, Union

from ..exceptions import DomainError

Scalar = Union[int, Fraction]


class Interval(object):
    """ Closed interval [lo, hi] with Fraction endpoints, closed under +, -, * and integer powers """
    __slots__ = ('lo', 'hi')

    def __init__(self, lo: Scalar, hi: Optional[Scalar] = None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)

        if lo > hi:
            raise DomainError(f"Expected Domain Error || interval endpoints out of order: [{lo}, {hi}]")

        self.lo: Fraction = lo
        self.hi: Fraction = hi

    def __repr__(self):
        return f'Interval({self.lo}, {self.hi})'

    def __eq__(self, other):
        if isinstance(other, Interval):
            return self.lo == other.lo and self.hi == other.hi
        return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __contains__(self, value: Scalar) -> bool:
        return self.lo <= value <= self.hi

    def __add__(self, other: Union['Interval', Scalar]) -> 'Interval':
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi)
        return Interval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __neg__(self) -> 'Interval':
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: Union['Interval', Scalar]) -> 'Interval':
        return self + (-other)

    def __rsub__(self, other: Scalar) -> 'Interval':
        return (-self) + other

    def __mul__(self, other: Union['Interval', Scalar]) -> 'Interval':
        if isinstance(other, Interval):
            if self.lo >= 0 and other.lo >= 0:
                return Interval(self.lo * other.lo, self.hi * other.hi)
            products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
            return Interval(min(products), max(products))

        if other >= 0:
            return Interval(self.lo * other, self.hi * other)
        return Interval(self.hi * other, self.lo * other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Interval':
        if exponent < 0:
            raise DomainError("Expected Domain Error || only non-negative integer powers of an interval are supported")

        if exponent == 0:
            return Interval(1)

        if self.lo >= 0 or exponent % 2 == 1:
            return Interval(self.lo ** exponent, self.hi ** exponent)

        if self.hi <= 0:
            return Interval(self.hi ** exponent, self.lo ** exponent)

        return Interval(0, max(self.lo ** exponent, self.hi ** exponent))

    @property
    def width(self) -> Fraction:
        """ Width hi - lo of the interval """
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        """ True when the interval is a single rational """
        return self.lo == self.hi

    def floor(self) -> Optional[int]:
        """
        The floor shared by every point of the interval

        Returns:
            Optional[int]: floor(lo) when it equals floor(hi), None when the interval straddles an integer

        """
        low = math.floor(self.lo)
        if low != math.floor(self.hi):
            return None

        return low

    def intersect(self, other: 'Interval') -> 'Interval':
        """ Intersection of two enclosures of the same value """
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)

        if lo > hi:
            raise DomainError(f"Expected Domain Error || disjoint enclosures {self} and {other}")

        return Interval(lo, hi)

    def magnitude_bits(self) -> int:
        """ Number of bits of the integer part of max(|lo|, |hi|) """
        return math.ceil(max(abs(self.lo), abs(self.hi))).bit_length()
