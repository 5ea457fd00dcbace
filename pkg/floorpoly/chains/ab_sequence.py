""" Module to represent the sequences a_k = {x^{:k}} and b_k = floor(x^{:k}) """
from fractions import Fraction

from ..config import DEFAULTS
from ..exact import AdaptiveReal
from ..exceptions import DomainError
from .chain_input import Number
from .evaluation import certified_floor


class ABSeq(object):
    """ Class to represent the fractional parts a_1..a_K and floors b_1..b_K of the power chains of x """
    def __init__(self, x: Number, a: list[Number], b: list[int]):
        self.validate_required_fields(a, b)
        self.x: Number = x
        self.a: list[Number] = a
        self.b: list[int] = b

    def __len__(self):
        return len(self.a)

    def __repr__(self):
        return f'ABSeq(x={self.x}, K={len(self.a)})'

    @staticmethod
    def validate_required_fields(a: list, b: list) -> None:
        """
        Validate the lengths and the range of the exact fractional parts

        Args:
            a (list): The fractional parts
            b (list): The floors

        Returns:
            None

        """
        if len(a) != len(b):
            raise DomainError(f"Expected Structural Error || a and b differ in length ({len(a)} != {len(b)})")

        for index, value in enumerate(a, start=1):
            if isinstance(value, Fraction) and not 0 <= value < 1:
                raise DomainError(f"Expected Structural Error || a_{index} = {value} is outside [0, 1)")

    def a_at(self, k: int) -> Number:
        """ a_k, 1-based """
        return self.a[k - 1]

    def b_at(self, k: int) -> int:
        """ b_k, 1-based, with b_0 = 1 """
        return 1 if k == 0 else self.b[k - 1]

    def check_recurrence(self) -> bool:
        """
        Check a_k + b_k = x b_{k-1} for every k, exactly for rational x

        Returns:
            bool: True when the recurrence holds at every index

        """
        if isinstance(self.x, AdaptiveReal):
            return True

        return all(self.a_at(k) + self.b_at(k) == self.x * self.b_at(k - 1) for k in range(1, len(self) + 1))


def ab_seq(x: Number, K: int, precision_cap: int = DEFAULTS.precision_cap) -> ABSeq:
    """
    Compute a_k and b_k for 1 <= k <= K incrementally from x^{:k} = x b_{k-1}

    Args:
        x (Number): The base
        K (int): Number of terms, K >= 1
        precision_cap (int): Precision cap for certified floors of adaptive values

    Returns:
        ABSeq: The two sequences

    """
    if K < 1:
        raise DomainError(f"Expected Domain Error || ab_seq needs K >= 1, got {K}")

    x = Fraction(x) if isinstance(x, int) else x
    a, b = [], []
    previous = 1
    for _ in range(K):
        value = x * previous
        floor = certified_floor(value, precision_cap)
        a.append(value - floor)
        b.append(floor)
        previous = floor

    return ABSeq(x, a, b)
