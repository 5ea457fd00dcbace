""" Module evaluating the nested floor chains X^{a:b} and the power chains x^{:k} """
import math

from fractions import Fraction
from typing import Callable, Optional

from ..config import DEFAULTS
from ..exact import AdaptiveReal, real_floor
from ..exceptions import DomainError
from .chain_input import ChainInput, Number

Bracket = Callable[[Number], Number]


def certified_floor(value: Number, precision_cap: int = DEFAULTS.precision_cap) -> int:
    """
    Floor of an exact or adaptive value. Adaptive values are certified through real_floor.

    Args:
        value (Number): An int, Fraction or AdaptiveReal
        precision_cap (int): Precision cap handed to real_floor

    Returns:
        int: The floor

    """
    if isinstance(value, AdaptiveReal):
        return real_floor(value, precision_cap=precision_cap).unwrap()

    return math.floor(value)


def floor_bracket(precision_cap: int = DEFAULTS.precision_cap) -> Bracket:
    """ The floor function as a bracket, certified at the given cap """
    def bracket(value: Number) -> int:
        return certified_floor(value, precision_cap)

    return bracket


def fractional_part(value: Number, bracket: Optional[Bracket] = None) -> Number:
    """ {value} = value - bracket(value), where the bracket defaults to the floor """
    bracket = bracket or floor_bracket()
    return value - bracket(value)


def eval_chain(chain: ChainInput, a: int, b: int, bracket: Optional[Bracket] = None) -> Number:
    """
    Evaluate X^{a:b} = x_a [x_{a+1} [ ... [x_{b-1}] ... ]], innermost factor first.

    Args:
        chain (ChainInput): The cyclic entries x_0, ..., x_{n-1}
        a (int): First index
        b (int): End index, a <= b
        bracket (Optional[Bracket]): Replacement for the floor, the floor when omitted

    Returns:
        Number: 1 when a == b, the chain value otherwise

    """
    if a > b:
        raise DomainError(f"Expected Domain Error || chain bounds must satisfy a <= b, got a={a}, b={b}")

    if a == b:
        return Fraction(1)

    bracket = bracket or floor_bracket()
    value = chain[b - 1]
    for index in range(b - 2, a - 1, -1):
        value = chain[index] * bracket(value)

    return value


def power_chain(x: Number, k: int, precision_cap: int = DEFAULTS.precision_cap) -> Number:
    """
    Evaluate x^{:k} = x floor(x^{:(k-1)}) with x^{:0} = 1

    Args:
        x (Number): The base
        k (int): Depth, k >= 0
        precision_cap (int): Precision cap for certified floors of adaptive values

    Returns:
        Number: x^{:k}

    """
    if k < 0:
        raise DomainError(f"Expected Domain Error || power chain depth must be >= 0, got {k}")

    if k == 0:
        return Fraction(1)

    x = Fraction(x) if isinstance(x, int) else x
    value = x
    for _ in range(k - 1):
        value = x * certified_floor(value, precision_cap)

    return value
