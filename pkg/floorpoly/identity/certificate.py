""" Module building the symbolic certificate that all non-product terms of the identity cancel """
import itertools
import logging
import math

from fractions import Fraction
from typing import Optional, Union

from ..chains import Bracket, ChainInput, floor_bracket
from ..exceptions import SizeGuardError
from .expansion import ExpansionTerm, expand_cut_set
from .identity import eval_identity, generate_terms
from .term_expr import ChainCache, term_count

logger = logging.getLogger(__name__)

MAX_CERTIFICATE_N = 9
PRINTED_WITNESS = (Fraction(3, 2), Fraction(5, 2), Fraction(7, 2))


class ExpansionGroup(object):
    """ All signed occurrences of one expanded product, with the cut sets they came from """
    def __init__(self, term: ExpansionTerm):
        self.term: ExpansionTerm = term
        self.contributions: list[tuple[frozenset[int], int, str]] = []

    def __repr__(self):
        return f'ExpansionGroup({self.term.render()}, coefficient={self.coefficient})'

    def add(self, cut_set: frozenset[int], sign: int, origin: str):
        """ Record one occurrence """
        self.contributions.append((cut_set, sign, origin))

    @property
    def coefficient(self) -> int:
        """ Total signed coefficient of the product """
        return sum(sign for _, sign, _ in self.contributions)

    @property
    def cut_sets(self) -> set[frozenset[int]]:
        """ The distinct cut sets contributing to the product """
        return {cut_set for cut_set, _, _ in self.contributions}

    def signs_by_cut_set(self) -> dict[frozenset[int], int]:
        """ Net sign contributed by each cut set """
        signs: dict[frozenset[int], int] = {}
        for cut_set, sign, _ in self.contributions:
            signs[cut_set] = signs.get(cut_set, 0) + sign

        return signs

    @property
    def matches_characterization(self) -> bool:
        """ True when the contributing cut sets are exactly the predicted ones """
        return self.cut_sets == self.term.predicted_cut_sets()


class CancellationCertificate(object):
    """ Grouped symbolic expansion of the identity for one n """
    def __init__(self, n: int):
        self.n: int = n
        self.groups: dict[ExpansionTerm, ExpansionGroup] = {}
        self.notes: list[str] = []

    def __getitem__(self, item: Union[ExpansionTerm, str]) -> ExpansionGroup:
        if isinstance(item, ExpansionTerm):
            return self.groups[item]

        for group in self.groups.values():
            if group.term.render() == item:
                return group

        raise KeyError(f"Expansion term {item} not found in the certificate for n={self.n}")

    def __iter__(self):
        return iter(self.groups[term] for term in sorted(self.groups))

    def __len__(self):
        return len(self.groups)

    def __repr__(self):
        return f'CancellationCertificate(n={self.n}, groups={len(self.groups)}, holds={self.holds})'

    def add(self, term: ExpansionTerm, cut_set: frozenset[int], sign: int, origin: str):
        """ Record one signed occurrence of an expanded product """
        if term not in self.groups:
            self.groups[term] = ExpansionGroup(term)

        self.groups[term].add(cut_set, sign, origin)

    @property
    def bare_group(self) -> ExpansionGroup:
        """ The group of the bare product x_0 ... x_{n-1} """
        return self.groups[ExpansionTerm(self.n, [])]

    @property
    def residual_groups(self) -> list[ExpansionGroup]:
        """ Every group other than the bare product """
        return [group for group in self if not group.term.is_bare_product]

    @property
    def nonzero_residuals(self) -> list[ExpansionGroup]:
        """ Residual groups whose coefficient does not vanish """
        return [group for group in self.residual_groups if group.coefficient != 0]

    @property
    def characterization_mismatches(self) -> list[ExpansionGroup]:
        """ Residual groups whose cut sets differ from the predicted ones """
        return [group for group in self.residual_groups if not group.matches_characterization]

    @property
    def holds(self) -> bool:
        """ True when the bare product has coefficient +1 from the full set only and every residual cancels """
        bare = self.bare_group
        return (bare.coefficient == 1 and bare.cut_sets == {frozenset(range(self.n))}
                and not self.nonzero_residuals and not self.characterization_mismatches)

    def evaluate(self, chain: ChainInput, bracket: Optional[Bracket] = None, grouped: bool = True):
        """
        Re-evaluate the expansion numerically

        Args:
            chain (ChainInput): Exact entries of length n
            bracket (Optional[Bracket]): Replacement for the floor
            grouped (bool): Sum coefficient times product per group, or every occurrence separately

        Returns:
            Fraction: The value of the expansion
        """
        cache = ChainCache(chain, bracket or floor_bracket())
        total = Fraction(0)
        for group in self:
            value = group.term.evaluate(cache)
            if grouped:
                total += group.coefficient * value
            else:
                for _, sign, _ in group.contributions:
                    total += sign * value

        return total

    def summary(self) -> str:
        """ One paragraph of text describing the certificate """
        lines = [f'n={self.n}: {term_count(self.n)} terms, {len(self)} expanded products, '
                 f'bare product coefficient {self.bare_group.coefficient}']

        if self.nonzero_residuals:
            lines.append(f'{len(self.nonzero_residuals)} residual coefficients nonzero')
        else:
            lines.append('all residual coefficients zero')

        if self.characterization_mismatches:
            lines.append(f'{len(self.characterization_mismatches)} residual products with unexpected cut sets')
        else:
            lines.append('cut sets match the predicted characterization')

        lines.extend(self.notes)

        return '\n'.join(lines)

    def to_dict(self) -> dict:
        """ JSON-ready form of the certificate """
        return dict(
            n=self.n,
            holds=self.holds,
            bare_coefficient=self.bare_group.coefficient,
            groups=len(self),
            nonzero_residuals=[group.term.render() for group in self.nonzero_residuals],
            characterization_mismatches=[group.term.render() for group in self.characterization_mismatches],
            notes=list(self.notes),
        )


def cancellation_certificate(n: int) -> CancellationCertificate:
    """
    Expand every {X} of the identity as X - [X], group identical products and certify the cancellation

    Args:
        n (int): Number of factors, 1 <= n <= 9

    Returns:
        CancellationCertificate: The grouped expansion
    """
    if not 1 <= n <= MAX_CERTIFICATE_N:
        raise SizeGuardError(
            f"Expected Size Error || the cancellation certificate supports 1 <= n <= {MAX_CERTIFICATE_N}, got {n}")

    certificate = CancellationCertificate(n)
    for size in range(1, n + 1):
        for cut_points in itertools.combinations(range(n), size):
            cut_set = frozenset(cut_points)
            for term, sign, origin in expand_cut_set(cut_points, n):
                certificate.add(term, cut_set, sign, origin)

    if n == 3:
        certificate.notes.append(printed_cubic_note())

    logger.info('certificate for n=%d: %d groups, holds=%s', n, len(certificate), certificate.holds)

    return certificate


def printed_cubic_note() -> str:
    """
    Compare the widely printed three-variable identity, whose third negative term reads -z[x[y]], with the
    generated term -[x[y]][z] on a fixed rational witness

    Returns:
        str: A note for the n = 3 certificate
    """
    chain = ChainInput(PRINTED_WITNESS)
    generated = eval_identity(chain, generate_terms(3))
    floor_x0_x1 = math.floor(chain[0] * math.floor(chain[1]))
    printed = generated + floor_x0_x1 * math.floor(chain[2]) - chain[2] * floor_x0_x1
    product = math.prod(chain, start=Fraction(1))
    verdict = 'holds' if printed == product else f'fails ({printed} != {product})'

    return (f"printed third negative term '-x2*fl(x0*fl(x1))' differs from generated '-fl(x0*fl(x1))*fl(x2)'; "
            f"printed form at x = (3/2, 5/2, 7/2) {verdict}")
