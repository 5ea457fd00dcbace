""" Module to define the AlphaSpec class, the command line form of an irrational or rational alpha """
import re

from typing import Optional

from ..exact import AdaptiveReal
from ..exceptions import AlphaFormatError
from ..tools import to_fraction


class AlphaSpec(object):
    """ Class to represent an alpha written as `rat:p/q`, `root:b,d` (the d-th root of b) or `pi` """
    PATTERN: str = r"^rat:[+-]?\d+(/\d+)?$|^root:\d+(/\d+)?,\d+$|^pi$"

    def __init__(self, literal: str):
        self.__validate(literal)
        self.__literal = literal
        self.__value = self.__parse(literal)

    def __call__(self) -> AdaptiveReal:
        return self.__value

    def __eq__(self, other):
        if isinstance(other, AlphaSpec):
            return self.__literal == other.__literal
        return str(self) == other

    def __hash__(self):
        return hash(self.__literal)

    def __repr__(self):
        return f"AlphaSpec('{self.__literal}')"

    def __str__(self):
        return self.__literal

    def __getstate__(self):
        return {'literal': self.__literal}

    def __setstate__(self, state):
        self.__literal = state['literal']
        self.__value = self.__parse(state['literal'])

    def __validate(self, literal: str):
        if not isinstance(literal, str) or not re.match(self.PATTERN, literal):
            raise AlphaFormatError(
                f"Expected Alpha Error || invalid alpha `{literal}`, expected rat:p/q, root:b,d or pi")

    @staticmethod
    def __parse(literal: str) -> AdaptiveReal:
        kind, _, body = literal.partition(':')
        try:
            if kind == 'rat':
                return AdaptiveReal.rational(to_fraction(body))

            if kind == 'root':
                base, degree = body.split(',')
                if int(degree) < 1:
                    raise AlphaFormatError(f"Expected Alpha Error || root degree must be >= 1 in `{literal}`")
                return AdaptiveReal.nth_root(to_fraction(base), int(degree))
        except ValueError as error:
            if isinstance(error, AlphaFormatError):
                raise
            raise AlphaFormatError(f"Expected Alpha Error || {error} in `{literal}`") from None

        return AdaptiveReal.pi()

    @property
    def value(self) -> AdaptiveReal:
        return self.__value

    @property
    def literal(self) -> str:
        return self.__literal

    def power_is_rational(self, exponent: int) -> Optional[bool]:
        """ Whether alpha^exponent is rational, None when undecidable """
        return self.__value.power_is_rational(exponent)

    def to_json(self) -> dict:
        """
        Returns the alpha as a JSON object.

        Returns:
            dict: The literal under the key `alpha`

        """
        return {"alpha": self.__literal}
