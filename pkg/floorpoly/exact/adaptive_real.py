""" Module to represent a real number as a refinable interval oracle """
import logging
import math
import threading

from fractions import Fraction
from typing import Optional, Union

import mpmath
from sympy import integer_nthroot

from ..exceptions import DomainError
from .interval import Interval

logger = logging.getLogger(__name__)

_MPMATH_LOCK = threading.Lock()
_MAGNITUDE_PRECISION = 8
_PI_GUARD_BITS = 16

Operand = Union['AdaptiveReal', int, Fraction]


class AdaptiveReal(object):
    """
    A real number known through interval enclosures of any requested precision.

    The descriptor is one of rational, nth_root, pi, sum, product or negation. Values are immutable
    except for the cached enclosure, which only ever shrinks: every refinement is intersected with the
    cached interval, so the width at a higher precision never exceeds the width at a lower one.
    """
    RATIONAL = 'rational'
    NTH_ROOT = 'nth_root'
    PI = 'pi'
    SUM = 'sum'
    PRODUCT = 'product'
    NEGATION = 'negation'

    KINDS = (RATIONAL, NTH_ROOT, PI, SUM, PRODUCT, NEGATION)

    def __init__(self, kind: str, *operands):
        self.validate_descriptor(kind, operands)
        self.kind: str = kind
        self.operands: tuple = operands

        self.__lock = threading.RLock()
        self.__precision: int = -1
        self.__enclosure: Optional[Interval] = None

        if kind == self.RATIONAL:
            self.__precision = math.inf
            self.__enclosure = Interval(operands[0])

    def __repr__(self):
        if self.kind == self.RATIONAL:
            return f'AdaptiveReal({self.operands[0]})'
        if self.kind == self.NTH_ROOT:
            return f'AdaptiveReal(root({self.operands[0]}, {self.operands[1]}))'
        if self.kind == self.PI:
            return 'AdaptiveReal(pi)'
        if self.kind == self.NEGATION:
            return f'-{self.operands[0]!r}'

        symbol = '+' if self.kind == self.SUM else '*'
        return f'({self.operands[0]!r} {symbol} {self.operands[1]!r})'

    def __getstate__(self):
        return {'kind': self.kind, 'operands': self.operands, 'precision': self.__precision,
                'enclosure': self.__enclosure}

    def __setstate__(self, state):
        self.kind = state['kind']
        self.operands = state['operands']
        self.__lock = threading.RLock()
        self.__precision = state['precision']
        self.__enclosure = state['enclosure']

    @staticmethod
    def validate_descriptor(kind: str, operands: tuple) -> None:
        """
        Validate the descriptor of an AdaptiveReal

        Args:
            kind (str): One of AdaptiveReal.KINDS
            operands (tuple): The operands the kind expects

        Returns:
            None

        """
        if kind not in AdaptiveReal.KINDS:
            raise DomainError(f"Expected Descriptor Error || unknown AdaptiveReal kind `{kind}`")

        if kind == AdaptiveReal.RATIONAL and (len(operands) != 1 or not isinstance(operands[0], Fraction)):
            raise DomainError("Expected Descriptor Error || `rational` expects a single Fraction")

        if kind == AdaptiveReal.NTH_ROOT:
            if len(operands) != 2 or not isinstance(operands[0], Fraction) or not isinstance(operands[1], int):
                raise DomainError("Expected Descriptor Error || `nth_root` expects (Fraction base, int degree)")
            if operands[0] < 0:
                raise DomainError(f"Expected Descriptor Error || `nth_root` base must be >= 0, got {operands[0]}")
            if operands[1] < 1:
                raise DomainError(f"Expected Descriptor Error || `nth_root` degree must be >= 1, got {operands[1]}")

        if kind in (AdaptiveReal.SUM, AdaptiveReal.PRODUCT):
            if len(operands) != 2 or not all(isinstance(operand, AdaptiveReal) for operand in operands):
                raise DomainError(f"Expected Descriptor Error || `{kind}` expects two AdaptiveReal operands")

        if kind == AdaptiveReal.NEGATION and (len(operands) != 1 or not isinstance(operands[0], AdaptiveReal)):
            raise DomainError("Expected Descriptor Error || `negation` expects one AdaptiveReal operand")

    @classmethod
    def rational(cls, value: Union[int, Fraction]) -> 'AdaptiveReal':
        """ Exact rational value """
        return cls(cls.RATIONAL, Fraction(value))

    @classmethod
    def nth_root(cls, base: Union[int, Fraction], degree: int) -> 'AdaptiveReal':
        """ The non-negative degree-th root of a non-negative rational base """
        return cls(cls.NTH_ROOT, Fraction(base), int(degree))

    @classmethod
    def pi(cls) -> 'AdaptiveReal':
        """ The circle constant """
        return cls(cls.PI)

    @classmethod
    def coerce(cls, value: Operand) -> 'AdaptiveReal':
        """ Wrap ints and Fractions as rational descriptors """
        if isinstance(value, AdaptiveReal):
            return value

        if isinstance(value, (int, Fraction)):
            return cls.rational(value)

        raise TypeError(f"Expected Operand Error || cannot build an AdaptiveReal from {type(value).__name__}")

    @property
    def is_rational(self) -> bool:
        """ True when the descriptor is an exact rational """
        return self.kind == self.RATIONAL

    @property
    def rational_value(self) -> Fraction:
        """ The exact value of a rational descriptor """
        if not self.is_rational:
            raise DomainError(f"Expected Descriptor Error || {self!r} is not a rational descriptor")

        return self.operands[0]

    @property
    def precision(self) -> float:
        """ Precision level of the cached enclosure, -1 before the first refinement """
        return self.__precision

    def __add__(self, other: Operand) -> 'AdaptiveReal':
        other = AdaptiveReal.coerce(other)
        if self.is_rational and other.is_rational:
            return AdaptiveReal.rational(self.rational_value + other.rational_value)

        return AdaptiveReal(self.SUM, self, other)

    __radd__ = __add__

    def __neg__(self) -> 'AdaptiveReal':
        if self.is_rational:
            return AdaptiveReal.rational(-self.rational_value)

        return AdaptiveReal(self.NEGATION, self)

    def __sub__(self, other: Operand) -> 'AdaptiveReal':
        return self + (-AdaptiveReal.coerce(other))

    def __rsub__(self, other: Operand) -> 'AdaptiveReal':
        return AdaptiveReal.coerce(other) + (-self)

    def __mul__(self, other: Operand) -> 'AdaptiveReal':
        other = AdaptiveReal.coerce(other)
        if self.is_rational and other.is_rational:
            return AdaptiveReal.rational(self.rational_value * other.rational_value)

        return AdaptiveReal(self.PRODUCT, self, other)

    __rmul__ = __mul__

    def __float__(self) -> float:
        enclosure = self.enclosure(64)
        return float((enclosure.lo + enclosure.hi) / 2)

    def enclosure(self, precision: int) -> Interval:
        """
        An interval guaranteed to contain the value, of width about 2^-precision

        Args:
            precision (int): Requested number of bits below the binary point

        Returns:
            Interval: The enclosure, cached and never wider than a previous one

        """
        with self.__lock:
            if precision <= self.__precision:
                return self.__enclosure

            refined = self.__compute(precision)
            if self.__enclosure is not None:
                refined = refined.intersect(self.__enclosure)

            self.__precision = precision
            self.__enclosure = refined

            return refined

    def __compute(self, precision: int) -> Interval:
        if self.kind == self.NTH_ROOT:
            return self.__root_enclosure(precision)

        if self.kind == self.PI:
            return self.__pi_enclosure(precision)

        if self.kind == self.NEGATION:
            return -self.operands[0].enclosure(precision)

        left, right = self.operands
        if self.kind == self.SUM:
            return left.enclosure(precision + 1) + right.enclosure(precision + 1)

        guard = 2 + max(left.enclosure(_MAGNITUDE_PRECISION).magnitude_bits(),
                        right.enclosure(_MAGNITUDE_PRECISION).magnitude_bits())

        return left.enclosure(precision + guard) * right.enclosure(precision + guard)

    def __root_enclosure(self, precision: int) -> Interval:
        base, degree = self.operands
        shifted = base.numerator << (precision * degree)
        scaled, remainder = divmod(shifted, base.denominator)
        root, exact = integer_nthroot(scaled, degree)

        if exact and remainder == 0:
            return Interval(Fraction(root, 1 << precision))

        return Interval(Fraction(root, 1 << precision), Fraction(root + 1, 1 << precision))

    @staticmethod
    def __pi_enclosure(precision: int) -> Interval:
        with _MPMATH_LOCK:
            with mpmath.workprec(precision + _PI_GUARD_BITS):
                mantissa, exponent = mpmath.mpf(mpmath.pi).man_exp

        center = Fraction(int(mantissa)) * Fraction(2) ** int(exponent)
        half_width = Fraction(1, 1 << (precision + 1))
        logger.debug('pi enclosure refined to %d bits', precision)

        return Interval(center - half_width, center + half_width)

    def rational_power(self, exponent: int) -> Optional[Fraction]:
        """
        The exact value of value^exponent when the descriptor shows it is rational

        Args:
            exponent (int): A non-negative integer power

        Returns:
            Optional[Fraction]: The rational power, None when it is irrational or undecidable from the descriptor

        """
        if exponent == 0:
            return Fraction(1)

        if self.is_rational:
            return self.rational_value ** exponent

        if self.kind == self.NEGATION:
            inner = self.operands[0].rational_power(exponent)
            return None if inner is None else inner * (-1) ** exponent

        if self.kind == self.NTH_ROOT:
            base, degree = self.operands
            common = math.gcd(exponent, degree)
            raised = base ** (exponent // common)
            root_degree = degree // common
            numerator, numerator_exact = integer_nthroot(raised.numerator, root_degree)
            denominator, denominator_exact = integer_nthroot(raised.denominator, root_degree)
            if numerator_exact and denominator_exact:
                return Fraction(int(numerator), int(denominator))

        return None

    def power_is_rational(self, exponent: int) -> Optional[bool]:
        """
        Decide whether value^exponent is rational

        Args:
            exponent (int): A non-negative integer power

        Returns:
            Optional[bool]: True or False when decidable from the descriptor, None otherwise

        """
        if self.rational_power(exponent) is not None:
            return True

        if self.kind in (self.PI, self.NTH_ROOT):
            return False

        if self.kind == self.NEGATION:
            return self.operands[0].power_is_rational(exponent)

        return None
