""" Module to represent the products obtained by expanding every {X} as X - [X] """
import itertools

from typing import Iterable, Iterator

from ..chains import Number
from ..exceptions import DomainError
from .term_expr import ChainCache, TermExpr, render_chain

Block = tuple[int, int]


class ExpansionTerm(object):
    """
    A product x_{u_1}..x_{v_1-1} [X^{v_1:u_2}] x_{u_2}..x_{v_2-1} [X^{v_2:u_3}] ... around the cycle.

    Floor blocks are stored as (start, length) pairs sorted by start, so identical products hash equal.
    Positions not covered by a block are bare variables.
    """
    __slots__ = ('n', 'blocks')

    def __init__(self, n: int, blocks: Iterable[Block]):
        self.n: int = n
        self.blocks: tuple[Block, ...] = tuple(sorted((start % n, length) for start, length in blocks))
        self.validate_blocks(n, self.blocks)

    def __repr__(self):
        return f'ExpansionTerm({self.render()})'

    def __eq__(self, other):
        if isinstance(other, ExpansionTerm):
            return self.n == other.n and self.blocks == other.blocks
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __lt__(self, other: 'ExpansionTerm') -> bool:
        return (self.n, self.blocks) < (other.n, other.blocks)

    @staticmethod
    def validate_blocks(n: int, blocks: tuple[Block, ...]) -> None:
        """
        Validate that the floor blocks cover disjoint positions of the cycle

        Args:
            n (int): Cycle length
            blocks (tuple[Block, ...]): Sorted (start, length) pairs

        Returns:
            None

        """
        covered = set()
        for start, length in blocks:
            if length < 1:
                raise DomainError(f"Expected Structural Error || empty floor block at {start}")

            positions = {(start + offset) % n for offset in range(length)}
            if len(positions) != length or covered & positions:
                raise DomainError(f"Expected Structural Error || overlapping floor blocks {blocks} for n={n}")

            covered |= positions

    @property
    def is_bare_product(self) -> bool:
        """ True for the term x_0 x_1 ... x_{n-1} """
        return not self.blocks

    @property
    def bare_positions(self) -> list[int]:
        """ Indices of the variables outside every floor block """
        covered = {(start + offset) % self.n for start, length in self.blocks for offset in range(length)}
        return [position for position in range(self.n) if position not in covered]

    def runs(self) -> list[tuple[list[int], Block]]:
        """ For every block in order, the bare run immediately before it and the block itself """
        result = []
        for index, (start, length) in enumerate(self.blocks):
            previous_start, previous_length = self.blocks[index - 1]
            run_start = previous_start + previous_length
            run_length = (start - run_start) % self.n
            result.append(([(run_start + offset) % self.n for offset in range(run_length)], (start, length)))

        return result

    def render(self) -> str:
        """ Text form starting at u_1, e.g. 'x1*fl(x2*fl(x3))*x4*x5*fl(x6)*fl(x7*fl(x8*fl(x0)))' """
        if not self.blocks:
            return '*'.join(f'x{position}' for position in range(self.n))

        lengths = dict(self.blocks)
        last_start, last_length = self.blocks[-1]
        position = (last_start + last_length) % self.n
        pieces, walked = [], 0
        while walked < self.n:
            if position in lengths:
                pieces.append(f'fl({render_chain(position, position + lengths[position], self.n)})')
                step = lengths[position]
            else:
                pieces.append(f'x{position}')
                step = 1
            position = (position + step) % self.n
            walked += step

        return '*'.join(pieces)

    def predicted_cut_sets(self) -> set[frozenset[int]]:
        """
        The cut sets S whose expansion produces this term: every bare position, the start of every block
        not preceded by a bare run, and any subset T of the starts of blocks that are preceded by one

        Returns:
            set[frozenset[int]]: All predicted sets
        """
        if not self.blocks:
            return {frozenset(range(self.n))}

        fixed, optional = set(), []
        for run, (start, _) in self.runs():
            fixed.update(run)
            if run:
                optional.append(start)
            else:
                fixed.add(start)

        return {frozenset(fixed.union(chosen))
                for size in range(len(optional) + 1)
                for chosen in itertools.combinations(optional, size)}

    def evaluate(self, cache: ChainCache) -> Number:
        """ Value of the product on the chain held by the cache """
        value = None
        factors = [cache.chain[position] for position in self.bare_positions]
        factors += [cache.bracketed(start, start + length) for start, length in self.blocks]
        for factor in factors:
            value = factor if value is None else value * factor

        return value


def expand_cut_set(cut_points: tuple[int, ...], n: int) -> Iterator[tuple[ExpansionTerm, int, str]]:
    """
    Expand the terms a cut set defines. A one-element set gives the combined term x_s [X^{s+1:s+n}] as it
    stands. A larger set gives its split-floor term and its split-fractional term, with every {X^{a:b}}
    replaced by x_a [X^{a+1:b}] - [X^{a:b}]

    Args:
        cut_points (tuple[int, ...]): Strictly increasing nonempty subset of 0..n-1
        n (int): Cycle length

    Yields:
        tuple[ExpansionTerm, int, str]: The product, its sign and the kind of term it came from

    """
    if len(cut_points) == 1:
        s = cut_points[0]
        yield ExpansionTerm(n, [(s + 1, n - 1)] if n > 1 else []), 1, TermExpr.COMBINED
        return

    bounds = TermExpr(TermExpr.SPLIT_FRACTIONAL, cut_points, n).factor_bounds

    choices = []
    for a, b in bounds:
        bare = [(a + 1, b - a - 1)] if b - a > 1 else []
        choices.append(((bare, 1), ([(a, b - a)], -1)))

    for selection in itertools.product(*choices):
        blocks = [block for chosen, _ in selection for block in chosen]
        sign = 1
        for _, factor_sign in selection:
            sign *= factor_sign
        yield ExpansionTerm(n, blocks), sign, TermExpr.SPLIT_FRACTIONAL

    yield ExpansionTerm(n, [(a, b - a) for a, b in bounds]), -(-1) ** len(cut_points), TermExpr.SPLIT_FLOOR
