""" Module with the recursive function f_{k,l} and the exact check of the congruence it satisfies """
import logging
import math

from fractions import Fraction
from typing import Iterable, Union

from ..chains import power_chain
from ..exceptions import DomainError
from ..partition import p_hat
from .frac_vector import BarValues, FracVector, Real

logger = logging.getLogger(__name__)


def _frac(value: Real) -> Real:
    return value - math.floor(value)


class FConstruction(object):
    """
    Evaluates f_{j,L} and its bar values for every (j, L) reached from one top-level f_{k,l}, all on the
    same point y. Results are memoized on (j, L).
    """
    def __init__(self, y: FracVector):
        self.y: FracVector = y
        self.__values: dict[tuple[int, int], Real] = {}
        self.__bars: dict[tuple[int, int], BarValues] = {}

    def __repr__(self):
        return f'FConstruction({self.y!r}, memo={len(self.__values)})'

    def __len__(self):
        return len(self.__values)

    def bar_values(self, k: int, l: int) -> BarValues:
        """
        a_bar_j = {L_j c_j} and b_bar_j = [L_j c_j] for j < k, where L_j = k! l / j! and
        c_j = {(j-1)! y_j - f_{j,L_j}(y_1, ..., y_{j-1})}

        Args:
            k (int): Depth, 1 <= k <= len(y) + 1
            l (int): Scale, l >= 1

        Returns:
            BarValues: The two vectors

        """
        if (k, l) in self.__bars:
            return self.__bars[(k, l)]

        a_bar, b_bar = [], []
        for j in range(1, k):
            scale = math.factorial(k) * l // math.factorial(j)
            shifted = _frac(math.factorial(j - 1) * self.y.y(j) - self.value(j, scale))
            # sum_{i=1}^{L-1} [c + i/L] collapses to [L c] for c in [0, 1)
            b_bar.append(math.floor(scale * shifted))
            a_bar.append(_frac(scale * shifted))

        self.__bars[(k, l)] = BarValues(k, l, a_bar, b_bar)

        return self.__bars[(k, l)]

    def value(self, k: int, l: int) -> Real:
        """ f_{k,l}(y_1, ..., y_{k-1}) """
        if k == 1:
            return Fraction(0)

        if (k, l) not in self.__values:
            bars = self.bar_values(k, l)
            polynomial = p_hat(k)
            lifted = polynomial.evaluate({'a': bars.a_bar}) - polynomial.negate_arguments().evaluate({'a': bars.b_bar})
            self.__values[(k, l)] = _frac(lifted / (k * l))
            logger.debug('f_{%d,%d} = %s', k, l, self.__values[(k, l)])

        return self.__values[(k, l)]


def _check_arguments(k: int, l: int, y: FracVector) -> None:
    if k < 1 or l < 1:
        raise DomainError(f"Expected Domain Error || f_(k,l) needs k >= 1 and l >= 1, got k={k}, l={l}")

    if len(y) != k - 1:
        raise DomainError(f"Expected Domain Error || f_({k},{l}) takes {k - 1} arguments, got {len(y)}")


def f_kl(k: int, l: int, y: Union[FracVector, Iterable[Real]]) -> Real:
    """
    The function f_{k,l} from [0, 1)^(k-1) to [0, 1) with x^{:k}/l = x^k/(kl) - f_{k,l}(y) mod 1 where
    y_j = {x^j / (k! l)}. f_{1,l} = 0 and for k >= 2

        f_{k,l}(y) = {(p_hat_k(a_bar) - p_hat_k(-b_bar)) / (kl)}

    Args:
        k (int): Depth, k >= 1
        l (int): Scale, l >= 1
        y (Union[FracVector, Iterable[Real]]): k - 1 values in [0, 1)

    Returns:
        Real: The value in [0, 1), exact for Fraction input

    """
    y = y if isinstance(y, FracVector) else FracVector(y)
    _check_arguments(k, l, y)

    return FConstruction(y).value(k, l)


def bar_values(k: int, l: int, y: Union[FracVector, Iterable[Real]]) -> BarValues:
    """ The vectors a_bar and b_bar that f_{k,l}(y) is built from """
    y = y if isinstance(y, FracVector) else FracVector(y)
    _check_arguments(k, l, y)

    return FConstruction(y).bar_values(k, l)


def lemma_point(x: Union[int, Fraction], k: int, l: int) -> FracVector:
    """ (y_1, ..., y_{k-1}) with y_j = {x^j / (k! l)} """
    x = Fraction(x)
    scale = math.factorial(k) * l

    return FracVector(_frac(x ** j / scale) for j in range(1, k))


def verify_lemma1(x: Union[int, Fraction], k: int, l: int) -> bool:
    """
    Check {x^{:k} / l} = {x^k / (kl) - f_{k,l}({x / k!l}, ..., {x^{k-1} / k!l})} exactly

    Args:
        x (Union[int, Fraction]): Rational argument
        k (int): Depth, k >= 1
        l (int): Scale, l >= 1

    Returns:
        bool: True when both sides agree

    """
    if k < 1 or l < 1:
        raise DomainError(f"Expected Domain Error || the congruence needs k >= 1 and l >= 1, got k={k}, l={l}")

    x = Fraction(x)
    left = _frac(power_chain(x, k) / l)
    right = _frac(x ** k / (k * l) - f_kl(k, l, lemma_point(x, k, l)))

    if left != right:
        logger.info('congruence fails at x=%s, k=%d, l=%d: %s != %s', x, k, l, left, right)

    return left == right
