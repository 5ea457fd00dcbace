""" This module contains utility functions for the floorpoly package. """
import math
import random
import re

from fractions import Fraction
from typing import Optional, Union

RATIONAL_PATTERN: str = r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$"


def to_fraction(string: Union[str, int, Fraction]) -> Fraction:
    """
    Convert a string such as '7/3', '-2' or '5' to an exact Fraction. Decimal notation is rejected
    so that a command line value can never silently pick up a binary rounding error.

    Args:
        string (Union[str, int, Fraction]): The value to convert.

    Returns:
        Fraction: The exact rational value.

    """
    if isinstance(string, (int, Fraction)):
        return Fraction(string)

    if not re.match(RATIONAL_PATTERN, string):
        raise ValueError(f'This method only accepts "p" or "p/q" integer literals as input. Received: {string}')

    numerator, _, denominator = string.replace(' ', '').partition('/')
    if denominator and int(denominator) == 0:
        raise ValueError(f'Zero denominator in rational literal: {string}')

    return Fraction(int(numerator), int(denominator) if denominator else 1)


def to_fraction_list(string: str) -> list[Fraction]:
    """
    Convert a comma separated list such as '1/12,1/3' into Fractions. The empty string gives an empty list.

    Args:
        string (str): The comma separated rational literals.

    Returns:
        list[Fraction]: The parsed values in order.

    """
    if not string.strip():
        return []

    return [to_fraction(part) for part in string.split(',')]


def frac(value):
    """ Fractional part value - floor(value), exact for ints and Fractions """
    return value - math.floor(value)


def random_rational(rng: random.Random, bound: int = 10 ** 6, low: Optional[Fraction] = None,
                    high: Optional[Fraction] = None) -> Fraction:
    """
    A random rational with numerator and denominator of at most `bound` in absolute value, optionally
    restricted to the open interval (low, high)

    Args:
        rng (random.Random): Seeded source of randomness.
        bound (int): Largest numerator and denominator.
        low (Optional[Fraction]): Exclusive lower limit.
        high (Optional[Fraction]): Exclusive upper limit.

    Returns:
        Fraction: The drawn value.

    """
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if (low is None or value > low) and (high is None or value < high):
            return value
