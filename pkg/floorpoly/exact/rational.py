""" Module with the exact rational helpers: floor, fractional part and the scaled floor identities """
import math

from fractions import Fraction
from typing import Union

from ..exceptions import DomainError, VerificationError

Rational = Fraction
RationalLike = Union[int, Fraction]


def rat_floor(x: RationalLike) -> int:
    """
    Greatest integer less than or equal to x, computed exactly

    Args:
        x (RationalLike): An int or Fraction

    Returns:
        int: floor(x)

    """
    return math.floor(Fraction(x))


def rat_frac(x: RationalLike) -> Fraction:
    """
    Fractional part {x} = x - floor(x), which always lies in [0, 1)

    Args:
        x (RationalLike): An int or Fraction

    Returns:
        Fraction: The fractional part of x

    """
    x = Fraction(x)
    return x - math.floor(x)


def scaled_frac_identities(x: RationalLike, l: int) -> tuple[Fraction, int]:
    """
    Evaluate {l*x} and sum_{i=0}^{l-1} floor(x + i/l), asserting on the way that
    {l*x} = {l*{x}} and floor(l*x) equals the sum.

    Args:
        x (RationalLike): The rational argument
        l (int): A positive integer scale

    Returns:
        tuple[Fraction, int]: ({l*x}, sum of the l shifted floors)

    """
    if l < 1:
        raise DomainError(f"Expected Domain Error || `l` must be a positive integer, got {l}")

    x = Fraction(x)
    scaled_frac = rat_frac(l * x)
    floor_sum = sum(rat_floor(x + Fraction(i, l)) for i in range(l))

    if scaled_frac != rat_frac(l * rat_frac(x)):
        raise VerificationError(f"Expected Identity Error || {{l x}} != {{l {{x}}}} for x={x}, l={l}", (x, l))

    if rat_floor(l * x) != floor_sum:
        raise VerificationError(f"Expected Identity Error || floor(l x) != shifted floor sum for x={x}, l={l}", (x, l))

    return scaled_frac, floor_sum
