""" Module to represent integer polynomials in the indexed variables a_1, a_2, ... and b_1, b_2, ... """
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

from ..exceptions import DomainError
from .partition import MAX_PARTITION_N

Monomial = tuple[tuple[str, int, int], ...]
Scalar = Union[int, Fraction]

VARIABLES = ('a', 'b')

# a1..a30, b1..b30 and the series variable z, in that order
RING, *GENERATORS = ring(f'a1:{MAX_PARTITION_N + 1},b1:{MAX_PARTITION_N + 1},z', ZZ)
Z = GENERATORS[-1]
Z_POSITION = len(GENERATORS) - 1


def generator(name: str, index: int) -> PolyElement:
    """ The ring generator of name_index """
    return GENERATORS[_position(name, index)]


def _position(name: str, index: int) -> int:
    if name not in VARIABLES or not 1 <= index <= MAX_PARTITION_N:
        raise DomainError(f"Expected Structural Error || no variable {name}{index}, indices run 1..{MAX_PARTITION_N}")

    return VARIABLES.index(name) * MAX_PARTITION_N + index - 1


def _exponents(monomial: Iterable[tuple[str, int, int]]) -> tuple[int, ...]:
    exponents = [0] * RING.ngens
    for name, index, exponent in monomial:
        if exponent < 1:
            raise DomainError(f"Expected Structural Error || invalid factor {name}{index}^{exponent}")
        exponents[_position(name, index)] += exponent

    return tuple(exponents)


def _monomial(exponents: tuple[int, ...]) -> Monomial:
    return tuple((VARIABLES[position // MAX_PARTITION_N], position % MAX_PARTITION_N + 1, exponent)
                 for position, exponent in enumerate(exponents[:Z_POSITION]) if exponent)


def make_monomial(factors: Iterable[tuple[str, int, int]]) -> Monomial:
    """ Canonical monomial from (name, index, exponent) factors, merging repeats and dropping zero exponents """
    return _monomial(_exponents((name, index, exponent) for name, index, exponent in factors if exponent))


def render_monomial(monomial: Monomial) -> str:
    """ 'a1^2*a2' style text, '1' for the empty monomial """
    if not monomial:
        return '1'

    return '*'.join(f'{name}{index}' if exponent == 1 else f'{name}{index}^{exponent}'
                    for name, index, exponent in monomial)


class PartitionPolynomial(object):
    """
    Integer polynomial in the shared variable namespace a_1, a_2, ... and b_1, b_2, ...

    Instances are immutable views of an element of RING that is free of z. Arithmetic happens in the ring;
    monomials are exposed as canonical tuples of (name, index, exponent) sorted by name and index.
    """
    def __init__(self, element: Optional[PolyElement] = None):
        element = RING.zero if element is None else element
        self.validate_element(element)
        self.__element: PolyElement = element

    def __repr__(self):
        return f'PartitionPolynomial({self.render()})'

    def __len__(self):
        return len(self.__element)

    def __iter__(self):
        return iter(sorted(self.terms, key=self.__sort_key()))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.__element == other
        if isinstance(other, PartitionPolynomial):
            return self.__element == other.__element
        return NotImplemented

    __hash__ = None

    @staticmethod
    def validate_element(element: PolyElement) -> None:
        """
        Validate that the element lives in RING and does not involve z

        Args:
            element (PolyElement): The ring element

        Returns:
            None

        """
        if not isinstance(element, PolyElement) or element.ring != RING:
            raise DomainError(f"Expected Structural Error || {element!r} is not an element of the partition ring")

        if any(exponents[Z_POSITION] for exponents in element.itermonoms()):
            raise DomainError("Expected Structural Error || a partition polynomial cannot involve z")

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, int]) -> 'PartitionPolynomial':
        """ Build from monomial to integer coefficient """
        for monomial, coefficient in terms.items():
            if not isinstance(coefficient, int):
                raise DomainError(f"Expected Structural Error || coefficient {coefficient!r} of "
                                  f"{render_monomial(monomial)} is not an integer")

        return cls(RING.from_dict({_exponents(monomial): coefficient
                                   for monomial, coefficient in terms.items() if coefficient}))

    @classmethod
    def constant(cls, value: int) -> 'PartitionPolynomial':
        return cls(RING(value))

    @classmethod
    def variable(cls, name: str, index: int) -> 'PartitionPolynomial':
        """ The polynomial consisting of the single variable name_index """
        return cls(generator(name, index))

    @property
    def element(self) -> PolyElement:
        """ The underlying ring element """
        return self.__element

    @property
    def terms(self) -> dict[Monomial, int]:
        return {_monomial(exponents): int(coefficient) for exponents, coefficient in self.__element.iterterms()}

    @property
    def is_nonnegative(self) -> bool:
        """ True when every coefficient is >= 0 """
        return all(coefficient >= 0 for coefficient in self.__element.itercoeffs())

    def coefficient(self, monomial: Union[Monomial, Iterable[tuple[str, int, int]]]) -> int:
        """ Coefficient of a monomial, 0 when absent """
        return int(self.__element.get(_exponents(monomial), 0))

    def __add__(self, other: Union['PartitionPolynomial', int]) -> 'PartitionPolynomial':
        return PartitionPolynomial(self.__element + self.__coerce(other).__element)

    __radd__ = __add__

    def __neg__(self) -> 'PartitionPolynomial':
        return PartitionPolynomial(-self.__element)

    def __sub__(self, other: Union['PartitionPolynomial', int]) -> 'PartitionPolynomial':
        return PartitionPolynomial(self.__element - self.__coerce(other).__element)

    def __rsub__(self, other: int) -> 'PartitionPolynomial':
        return self.__coerce(other) - self

    def __mul__(self, other: Union['PartitionPolynomial', int]) -> 'PartitionPolynomial':
        return PartitionPolynomial(self.__element * self.__coerce(other).__element)

    __rmul__ = __mul__

    def __used_generators(self) -> list[PolyElement]:
        positions = {position for exponents in self.__element.itermonoms()
                     for position, exponent in enumerate(exponents) if exponent}
        return [GENERATORS[position] for position in sorted(positions)]

    def negate_arguments(self) -> 'PartitionPolynomial':
        """ p(-v_1, -v_2, ...): every monomial of odd total degree changes sign """
        used = self.__used_generators()
        if not used:
            return self

        return PartitionPolynomial(self.__element.compose([(variable, -variable) for variable in used]))

    def rename(self, old: str, new: str) -> 'PartitionPolynomial':
        """ Substitute the variables old_j by new_j """
        offset = (VARIABLES.index(new) - VARIABLES.index(old)) * MAX_PARTITION_N
        replacements = [(variable, GENERATORS[GENERATORS.index(variable) + offset])
                        for variable in self.__used_generators()
                        if VARIABLES[GENERATORS.index(variable) // MAX_PARTITION_N] == old]
        if not replacements:
            return self

        return PartitionPolynomial(self.__element.compose(replacements))

    def evaluate(self, values: Mapping[str, Sequence[Scalar]]) -> Scalar:
        """
        Evaluate exactly

        Args:
            values (Mapping[str, Sequence[Scalar]]): Values of each variable family, 1-based through index - 1,
                e.g. {'a': [a_1, a_2], 'b': [b_1, b_2]}

        Returns:
            Scalar: The value of the polynomial

        """
        total = Fraction(0)
        for monomial, coefficient in self.terms.items():
            term = Fraction(coefficient)
            for name, index, exponent in monomial:
                if name not in values or index > len(values[name]):
                    raise DomainError(f"Expected Domain Error || no value supplied for {name}{index}")
                term *= values[name][index - 1] ** exponent
            total += term

        return total

    def split(self, name: str) -> dict[Monomial, 'PartitionPolynomial']:
        """ Group the terms by their factor in the `name` variables: that factor mapped to its cofactor """
        groups: dict[Monomial, dict[Monomial, int]] = {}
        for monomial, coefficient in self.terms.items():
            inside = tuple(factor for factor in monomial if factor[0] == name)
            outside = tuple(factor for factor in monomial if factor[0] != name)
            groups.setdefault(inside, {})[outside] = coefficient

        return {inside: PartitionPolynomial.from_terms(terms) for inside, terms in groups.items()}

    def render(self) -> str:
        """
        Plain text with terms ordered like the printed power formulas, pure a-terms first, then b-terms,
        each family by decreasing exponent vectors, e.g. 'a1^3 + 3*a1*a2 + 3*a3 + b1^3 - 3*b1*b2 + 3*b3'

        Returns:
            str: The rendered polynomial, '0' when empty

        """
        terms = self.terms
        return _join_signed([_render_term(terms[monomial], render_monomial(monomial)) for monomial in self])

    def render_grouped(self, name: str = 'b') -> str:
        """
        Plain text with the cofactor of every `name` monomial collected in parentheses,
        e.g. 'a1^3 + 2*a1*a2 + a3 + (a1^2 + a2)*b1 + a1*b2 + b3'

        Args:
            name (str): The variable family to group by

        Returns:
            str: The rendered polynomial

        """
        groups = self.split(name)
        key = self.__sort_key()
        pieces = []
        for inside in sorted(groups, key=key):
            cofactor = groups[inside]
            if not inside:
                pieces.append(cofactor.render())
            elif len(cofactor) == 1:
                (outside, coefficient), = cofactor.terms.items()
                factors = [render_monomial(outside)] if outside else []
                pieces.append(_render_term(coefficient, '*'.join(factors + [render_monomial(inside)])))
            else:
                pieces.append(f'({cofactor.render()})*{render_monomial(inside)}')

        return _join_signed(pieces)

    def __sort_key(self):
        width = max((index for monomial in self.terms for _, index, _ in monomial), default=0)

        def key(monomial: Monomial):
            vectors = {name: [0] * width for name in VARIABLES}
            for name, index, exponent in monomial:
                vectors[name][index - 1] = -exponent

            return (any(vectors['b']), tuple(vectors['b']), tuple(vectors['a']))

        return key

    @staticmethod
    def __coerce(value: Union['PartitionPolynomial', int]) -> 'PartitionPolynomial':
        if isinstance(value, PartitionPolynomial):
            return value
        if isinstance(value, int):
            return PartitionPolynomial.constant(value)

        raise TypeError(f"Expected Structural Error || cannot combine a polynomial with {type(value).__name__}")


def _render_term(coefficient: int, body: str) -> str:
    if body == '1':
        return str(coefficient)
    if coefficient == 1:
        return body
    if coefficient == -1:
        return f'-{body}'

    return f'{coefficient}*{body}'


def _join_signed(pieces: list[str]) -> str:
    if not pieces:
        return '0'

    text = pieces[0]
    for piece in pieces[1:]:
        text += f' - {piece[1:]}' if piece.startswith('-') else f' + {piece}'

    return text
