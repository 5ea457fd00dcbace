""" Module for power series truncated after z^order, as elements of a sympy polynomial ring """
from fractions import Fraction
from typing import Sequence, Union

from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_diff, rs_mul, rs_series_inversion
from sympy.polys.rings import PolyElement, ring

from ..exceptions import DomainError

RATIONAL_RING, RATIONAL_Z = ring('z', QQ)


def coefficient(series: PolyElement, z: PolyElement, power: int) -> PolyElement:
    """ The coefficient of z^power, an element of the same ring free of z """
    index = series.ring.gens.index(z)
    terms = {exponents[:index] + (0,) + exponents[index + 1:]: value
             for exponents, value in series.iterterms() if exponents[index] == power}

    return series.ring.from_dict(terms)


def z_derivative(series: PolyElement, z: PolyElement) -> PolyElement:
    """ z d/dz of the series: the coefficient of z^j is multiplied by j """
    return z * rs_diff(series, z)


def divide(numerator: PolyElement, denominator: PolyElement, z: PolyElement, order: int) -> PolyElement:
    """
    numerator / denominator up to z^order

    Args:
        numerator (PolyElement): Any series of the ring
        denominator (PolyElement): A series whose constant term in z is 1
        z (PolyElement): The series generator
        order (int): Highest power of z kept

    Returns:
        PolyElement: The truncated quotient

    """
    if order < 0:
        raise DomainError(f"Expected Domain Error || series order must be >= 0, got {order}")

    if coefficient(denominator, z, 0) != 1:
        raise DomainError("Expected Domain Error || only series with constant term 1 are inverted")

    return rs_mul(numerator, rs_series_inversion(denominator, z, order + 1), z, order + 1)


def rational_series(values: Sequence[Union[int, Fraction]], constant: Union[int, Fraction] = 0) -> PolyElement:
    """ constant + values[0] z + values[1] z^2 + ... over QQ """
    terms = {(power,): QQ(int(Fraction(value).numerator), int(Fraction(value).denominator))
             for power, value in enumerate([constant, *values]) if value}

    return RATIONAL_RING.from_dict(terms)


def rational_coefficient(series: PolyElement, power: int) -> Fraction:
    """ The coefficient of z^power of a rational series as a Fraction """
    value = series.get((power,), QQ.zero)
    return Fraction(int(value.numerator), int(value.denominator))
