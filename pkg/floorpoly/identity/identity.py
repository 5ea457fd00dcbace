""" Module to represent the product identity for x_0 x_1 ... x_{n-1} as a collection of terms """
import itertools
import logging
import math

from fractions import Fraction
from typing import Iterable, Optional, Union

from ..chains import Bracket, ChainInput, Number, floor_bracket
from ..config import DEFAULTS
from ..exceptions import SizeGuardError
from .term_expr import ChainCache, TermExpr, term_count

logger = logging.getLogger(__name__)

MAX_TERMS_N = 20


class Identity(object):
    """ Class to represent the ordered terms whose sum is x_0 x_1 ... x_{n-1} """
    def __init__(self, n: int):
        self.n: int = n
        self.__terms: list[TermExpr] = []
        self.rendered: list[str] = []

    def __getitem__(self, item: Union[int, str]) -> TermExpr:
        if isinstance(item, int):
            return self.__terms[item]

        if item in self.rendered:
            return self.__terms[self.rendered.index(item)]

        raise KeyError(f"Term {item} not found in the identity for n={self.n}")

    def __iter__(self):
        return iter(self.__terms)

    def __len__(self):
        return len(self.__terms)

    def __repr__(self):
        return f'Identity(n={self.n}, terms={len(self.__terms)})'

    def add(self, term: TermExpr):
        """ Add a term to the identity """
        self.__terms.append(term)
        self.rendered.append(term.render())

    def by_kind(self, kind: str) -> list[TermExpr]:
        """ All terms of one kind """
        return [term for term in self.__terms if term.kind == kind]

    def render(self) -> str:
        """
        Render the right-hand side, e.g. 'x0*fl(x1) + x1*fl(x0) - fl(x0)*fl(x1) + fr(x0)*fr(x1)' for n = 2

        Returns:
            str: The terms joined by their signs

        """
        text = ''
        for index, rendered in enumerate(self.rendered):
            if index == 0:
                text = rendered
            elif rendered.startswith('-'):
                text += f' - {rendered[1:]}'
            else:
                text += f' + {rendered}'

        return text


def generate_terms(n: int) -> Identity:
    """
    Build the 2^(n+1) - n - 2 terms of the product identity: the combined terms X^{s:s+n} first, then the
    split-floor terms and the split-fractional terms, each ordered by |S| and then lexicographically.

    Args:
        n (int): Number of factors, 1 <= n <= 20

    Returns:
        Identity: The ordered terms

    """
    if not 1 <= n <= MAX_TERMS_N:
        raise SizeGuardError(f"Expected Size Error || term generation supports 1 <= n <= {MAX_TERMS_N}, got {n}")

    identity = Identity(n)
    for s in range(n):
        identity.add(TermExpr(TermExpr.COMBINED, (s,), n))

    for kind in (TermExpr.SPLIT_FLOOR, TermExpr.SPLIT_FRACTIONAL):
        for size in range(2, n + 1):
            for cut_points in itertools.combinations(range(n), size):
                identity.add(TermExpr(kind, cut_points, n))

    logger.debug('generated %d terms for n=%d', len(identity), n)
    assert len(identity) == term_count(n)

    return identity


def eval_identity(chain: Union[ChainInput, Iterable[Number]], terms: Optional[Identity] = None,
                  bracket: Optional[Bracket] = None, precision_cap: int = DEFAULTS.precision_cap) -> Number:
    """
    Sum of the identity's terms on the given chain. With exact entries the result equals the product of the
    entries, for the floor and for any other bracket.

    Args:
        chain (Union[ChainInput, Iterable[Number]]): The entries x_0, ..., x_{n-1}
        terms (Optional[Identity]): The identity, generated for len(chain) when omitted
        bracket (Optional[Bracket]): Replacement for the floor, the certified floor when omitted
        precision_cap (int): Precision cap for certified floors of adaptive entries

    Returns:
        Number: The sum of the terms

    """
    chain = chain if isinstance(chain, ChainInput) else ChainInput(chain)
    terms = terms if terms is not None else generate_terms(chain.n)

    if terms.n != chain.n:
        raise SizeGuardError(f"Expected Size Error || identity for n={terms.n} applied to a chain of length {chain.n}")

    cache = ChainCache(chain, bracket or floor_bracket(precision_cap))
    total: Number = Fraction(0)
    for term in terms:
        total = total + term.evaluate(cache)

    return total


def chain_product(chain: Union[ChainInput, Iterable[Number]]) -> Number:
    """ x_0 x_1 ... x_{n-1} """
    return math.prod(chain, start=Fraction(1))


def verify_arbitrary_bracket(chain: Union[ChainInput, Iterable[Fraction]], bracket: Bracket) -> bool:
    """
    Check that the identity still sums to the product when the floor is replaced by an arbitrary map and
    {x} is read as x - bracket(x)

    Args:
        chain (Union[ChainInput, Iterable[Fraction]]): Exact entries
        bracket (Bracket): Any total map from rationals to rationals

    Returns:
        bool: True when the sum equals the product exactly

    """
    chain = chain if isinstance(chain, ChainInput) else ChainInput(chain)
    return eval_identity(chain, bracket=bracket) == chain_product(chain)


def cubic_identity(x: Union[int, Fraction]) -> Fraction:
    """
    x^3 = 3x[x[x]] - 3[x][x[x]] + [x]^3 + 3{x}{x[x]} + {x}^3, evaluated exactly

    Args:
        x (Union[int, Fraction]): The rational argument

    Returns:
        Fraction: The right-hand side
    """
    x = Fraction(x)
    floor_x = math.floor(x)
    inner = x * floor_x
    floor_inner = math.floor(inner)

    return (3 * x * floor_inner - 3 * floor_x * floor_inner + floor_x ** 3
            + 3 * (x - floor_x) * (inner - floor_inner) + (x - floor_x) ** 3)
