""" Module to represent one term of the product identity """
from fractions import Fraction
from typing import Optional

from ..chains import Bracket, ChainInput, Number, eval_chain
from ..exceptions import DomainError


def render_chain(a: int, b: int, n: int) -> str:
    """
    Render X^{a:b} as text, e.g. X^{0:3} with n = 3 gives 'x0*fl(x1*fl(x2))'

    Args:
        a (int): First index
        b (int): End index, b > a
        n (int): Cycle length used to reduce indices

    Returns:
        str: The rendered chain

    """
    text = f'x{(b - 1) % n}'
    for index in range(b - 2, a - 1, -1):
        text = f'x{index % n}*fl({text})'

    return text


class ChainCache(object):
    """ Memo of chain values and their brackets for one evaluation of an identity """
    def __init__(self, chain: ChainInput, bracket: Bracket):
        self.chain: ChainInput = chain
        self.bracket: Bracket = bracket
        self.__values: dict[tuple[int, int], Number] = {}
        self.__brackets: dict[tuple[int, int], Number] = {}

    def __len__(self):
        return len(self.__values)

    def value(self, a: int, b: int) -> Number:
        """ X^{a:b} """
        key = (a % self.chain.n, b - a)
        if key not in self.__values:
            self.__values[key] = eval_chain(self.chain, a, b, self.bracket)

        return self.__values[key]

    def bracketed(self, a: int, b: int) -> Number:
        """ [X^{a:b}] """
        key = (a % self.chain.n, b - a)
        if key not in self.__brackets:
            self.__brackets[key] = self.bracket(self.value(a, b))

        return self.__brackets[key]

    def fractional(self, a: int, b: int) -> Number:
        """ {X^{a:b}} = X^{a:b} - [X^{a:b}] """
        return self.value(a, b) - self.bracketed(a, b)


class TermExpr(object):
    """
    One term of the product identity, built from an ordered cut set S = {s_1 < ... < s_k}.

    A combined term is X^{s:s+n} for |S| = 1. For |S| >= 2 the set gives a split-fractional term
    {X^{s_1:s_2}}...{X^{s_k:s_1+n}} with sign +1 and a split-floor term with the same factor boundaries,
    every factor floored, and sign -(-1)^k.
    """
    COMBINED = 'combined'
    SPLIT_FRACTIONAL = 'split-fractional'
    SPLIT_FLOOR = 'split-floor'

    KINDS = (COMBINED, SPLIT_FRACTIONAL, SPLIT_FLOOR)

    __slots__ = ('kind', 'cut_points', 'n', 'sign')

    def __init__(self, kind: str, cut_points: tuple[int, ...], n: int):
        self.validate_required_fields(kind, cut_points, n)
        self.kind: str = kind
        self.cut_points: tuple[int, ...] = tuple(cut_points)
        self.n: int = n
        self.sign: int = -(-1) ** len(cut_points) if kind == self.SPLIT_FLOOR else 1

    def __repr__(self):
        return f'TermExpr({self.render()})'

    def __eq__(self, other):
        if isinstance(other, TermExpr):
            return (self.kind, self.cut_points, self.n) == (other.kind, other.cut_points, other.n)
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.cut_points, self.n))

    @staticmethod
    def validate_required_fields(kind: str, cut_points: tuple[int, ...], n: int) -> None:
        """
        Validate the kind and the cut set of a term

        Args:
            kind (str): One of TermExpr.KINDS
            cut_points (tuple[int, ...]): Strictly increasing subset of {0, ..., n-1}
            n (int): Chain length

        Returns:
            None

        """
        if kind not in TermExpr.KINDS:
            raise DomainError(f"Expected Structural Error || unknown term kind `{kind}`")

        if not cut_points or any(not 0 <= s < n for s in cut_points):
            raise DomainError(f"Expected Structural Error || cut points {cut_points} must be a nonempty subset of "
                              f"0..{n - 1}")

        if any(left >= right for left, right in zip(cut_points, cut_points[1:])):
            raise DomainError(f"Expected Structural Error || cut points {cut_points} must be strictly increasing")

        if (kind == TermExpr.COMBINED) != (len(cut_points) == 1):
            raise DomainError("Expected Structural Error || combined terms arise exactly from one-element cut sets")

    @property
    def factor_bounds(self) -> list[tuple[int, int]]:
        """ Factor boundaries (s_1:s_2), (s_2:s_3), ..., (s_k:s_1+n) """
        ends = self.cut_points[1:] + (self.cut_points[0] + self.n,)
        return list(zip(self.cut_points, ends))

    def render(self) -> str:
        """ Text form with `fl(...)` for floors and `fr(...)` for fractional parts, sign included """
        if self.kind == self.COMBINED:
            s = self.cut_points[0]
            return render_chain(s, s + self.n, self.n)

        wrapper = 'fl' if self.kind == self.SPLIT_FLOOR else 'fr'
        body = '*'.join(f'{wrapper}({render_chain(a, b, self.n)})' for a, b in self.factor_bounds)

        return f'-{body}' if self.sign < 0 else body

    def evaluate(self, cache: ChainCache) -> Number:
        """
        Value of the term on the chain held by the cache

        Args:
            cache (ChainCache): Chain values and brackets for one input

        Returns:
            Number: The signed term value

        """
        if self.kind == self.COMBINED:
            s = self.cut_points[0]
            return cache.value(s, s + self.n)

        value: Optional[Number] = None
        for a, b in self.factor_bounds:
            factor = cache.bracketed(a, b) if self.kind == self.SPLIT_FLOOR else cache.fractional(a, b)
            value = factor if value is None else value * factor

        return -value if self.sign < 0 else value


def term_count(n: int) -> int:
    """ Number of terms of the combined identity for a product of n factors """
    return 2 ** (n + 1) - n - 2
