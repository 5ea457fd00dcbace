""" Module with the partition polynomials p_n and the power formulas for x^n in terms of a_k and b_k """
import functools
import logging
import math

from fractions import Fraction
from typing import Union

from sympy.polys.rings import PolyElement

from ..chains import ab_seq
from ..exceptions import DomainError, SizeGuardError, VerificationError
from .partition import MAX_PARTITION_N, partitions
from .polynomial import RING, Z, PartitionPolynomial, generator, make_monomial
from .series import RATIONAL_RING, RATIONAL_Z, coefficient, divide, rational_coefficient, rational_series, z_derivative

logger = logging.getLogger(__name__)


def _check_size(n: int, minimum: int = 1) -> None:
    if not minimum <= n <= MAX_PARTITION_N:
        raise SizeGuardError(f"Expected Size Error || n must lie in {minimum}..{MAX_PARTITION_N}, got {n}")


def _variable_series(name: str, order: int) -> PolyElement:
    """ v_1 z + v_2 z^2 + ... + v_order z^order """
    return sum((generator(name, j) * Z ** j for j in range(1, order + 1)), RING.zero)


@functools.lru_cache(maxsize=None)
def p_poly(n: int) -> PartitionPolynomial:
    """
    p_n(a_1, ..., a_n): one monomial a_1^{k_1} ... a_n^{k_n} per partition of n, with coefficient
    (k_1 + ... + k_n - 1)! n / (k_1! ... k_n!)

    Args:
        n (int): 1 <= n <= 30

    Returns:
        PartitionPolynomial: p_n, e.g. 'a1^3 + 3*a1*a2 + 3*a3' for n = 3

    """
    _check_size(n)

    terms = {}
    for partition in partitions(n):
        numerator = math.factorial(partition.length - 1) * n
        denominator = math.prod(math.factorial(k) for k in partition.multiplicities)
        coefficient, remainder = divmod(numerator, denominator)
        if remainder:
            raise VerificationError(
                f"Expected Verification Error || coefficient of {partition} is not an integer", partition)

        monomial = make_monomial(('a', index, k) for index, k in enumerate(partition.multiplicities, start=1))
        terms[monomial] = coefficient

    return PartitionPolynomial.from_terms(terms)


def p_hat(n: int) -> PartitionPolynomial:
    """ p_n without its unique linear term n a_n """
    if n < 2:
        raise DomainError("Expected Domain Error || p_hat needs n >= 2, the linear term is all of p_1")

    _check_size(n, minimum=2)

    return p_poly(n) - n * PartitionPolynomial.variable('a', n)


def power_identity_formula(n: int) -> PartitionPolynomial:
    """ p_n(a_1, ..., a_n) - p_n(-b_1, ..., -b_n), which equals x^n on a_k = {x^{:k}}, b_k = [x^{:k}] """
    _check_size(n)

    return p_poly(n) - p_poly(n).negate_arguments().rename('a', 'b')


def power_identity_check(x: Union[int, Fraction], n: int) -> bool:
    """
    Evaluate x^n = p_n(a) - p_n(-b) on the sequences of x, exactly

    Args:
        x (Union[int, Fraction]): The rational base
        n (int): 1 <= n <= 30

    Returns:
        bool: True when both sides agree

    """
    _check_size(n)

    sequences = ab_seq(Fraction(x), n)
    value = power_identity_formula(n).evaluate({'a': sequences.a, 'b': sequences.b})

    return value == Fraction(x) ** n


@functools.lru_cache(maxsize=None)
def _mixed_series(order: int) -> PolyElement:
    return divide(1 + _variable_series('b', order), 1 - _variable_series('a', order), Z, order)


def mixed_expansion(n: int) -> PartitionPolynomial:
    """
    Coefficient of z^n in (1 + b_1 z + b_2 z^2 + ...) / (1 - a_1 z - a_2 z^2 - ...), a formula for x^n
    with mixed a's and b's and no negative coefficients

    Args:
        n (int): 1 <= n <= 30

    Returns:
        PartitionPolynomial: e.g. 'a1^2 + a2 + a1*b1 + b2' for n = 2

    """
    _check_size(n)

    expansion = PartitionPolynomial(coefficient(_mixed_series(n), Z, n))
    if not expansion.is_nonnegative:
        raise VerificationError(f"Expected Verification Error || mixed expansion of degree {n} has a negative "
                                f"coefficient", n)

    return expansion


def render_mixed(n: int) -> str:
    """ The mixed expansion with the cofactor of each b-monomial in parentheses """
    return mixed_expansion(n).render_grouped('b')


def series_p_poly(n: int) -> PartitionPolynomial:
    """
    Coefficient of z^n in (a_1 z + 2 a_2 z^2 + ...) / (1 - a_1 z - a_2 z^2 - ...), which must be p_n

    Args:
        n (int): 1 <= n <= 30

    Returns:
        PartitionPolynomial: The extracted coefficient

    """
    _check_size(n)

    tail = _variable_series('a', n)
    return PartitionPolynomial(coefficient(divide(z_derivative(tail, Z), 1 - tail, Z, n), Z, n))


def series_consistency_check(x: Union[int, Fraction], N: int) -> bool:
    """
    Check on rational series that the logarithmic-derivative form and the quotient form both give x^n for
    every n <= N, in agreement with p_n, and that a_k + b_k = x b_{k-1} for every k <= N

    Args:
        x (Union[int, Fraction]): The rational base
        N (int): 1 <= N <= 30

    Returns:
        bool: True when every check passes

    """
    _check_size(N)

    x = Fraction(x)
    sequences = ab_seq(x, N)
    a = rational_series(sequences.a)
    b = rational_series(sequences.b)
    one = RATIONAL_RING.one

    logarithmic = (divide(z_derivative(a, RATIONAL_Z), one - a, RATIONAL_Z, N)
                   + divide(z_derivative(b, RATIONAL_Z), one + b, RATIONAL_Z, N))
    quotient = divide(one + b, one - a, RATIONAL_Z, N)

    for n in range(1, N + 1):
        expected = x ** n
        if rational_coefficient(logarithmic, n) != expected or rational_coefficient(quotient, n) != expected:
            logger.info('series check failed for x=%s at n=%d', x, n)
            return False

        if p_poly(n).evaluate({'a': sequences.a}) - p_poly(n).negate_arguments().evaluate({'a': sequences.b}) \
                != expected:
            logger.info('p_n check failed for x=%s at n=%d', x, n)
            return False

    return sequences.check_recurrence()
