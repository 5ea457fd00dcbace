""" Module to represent the description of a sequence whose values are measured mod 1 """
from typing import Iterable, Union

from ..config import DEFAULTS
from ..exceptions import DomainError
from .alpha import AlphaSpec


class SequenceSpec(object):
    """
    Class to represent one of the sequences n -> value_n, n = 1..N, taken mod 1:

    * power-chain: (alpha n)^{:k}
    * nested-alpha: alpha_1 n [alpha_2 n [ ... [alpha_k n] ... ]], with k = len(alphas)
    * floored-product: alpha_0 [alpha_1 n][alpha_2 n] ... [alpha_k n], with k = len(alphas) - 1
    * theorem-combination: m (alpha n)^k - k m (alpha n)^{:k}
    """
    POWER_CHAIN = 'power-chain'
    NESTED_ALPHA = 'nested-alpha'
    FLOORED_PRODUCT = 'floored-product'
    THEOREM_COMBINATION = 'theorem-combination'

    VARIANTS = (POWER_CHAIN, NESTED_ALPHA, FLOORED_PRODUCT, THEOREM_COMBINATION)

    def __init__(self, variant: str, alphas: Iterable[Union[AlphaSpec, str]], k: int = 1, m: int = 1,
                 N: int = DEFAULTS.ci_points, precision_cap: int = DEFAULTS.precision_cap,
                 precision_start: int = DEFAULTS.precision_start, value_bits: int = DEFAULTS.value_bits):
        self.variant: str = variant
        self.alphas: list[AlphaSpec] = [alpha if isinstance(alpha, AlphaSpec) else AlphaSpec(alpha)
                                        for alpha in alphas]
        self.k: int = self.__depth(variant, self.alphas, k)
        self.m: int = m
        self.N: int = N
        self.precision_cap: int = precision_cap
        self.precision_start: int = precision_start
        self.value_bits: int = value_bits

        self.validate_required_fields(self)

    def __repr__(self):
        return f'SequenceSpec({self.variant}, {", ".join(map(str, self.alphas))}, k={self.k}, m={self.m}, N={self.N})'

    @staticmethod
    def __depth(variant: str, alphas: list[AlphaSpec], k: int) -> int:
        if variant == SequenceSpec.NESTED_ALPHA:
            return len(alphas)
        if variant == SequenceSpec.FLOORED_PRODUCT:
            return len(alphas) - 1

        return k

    @staticmethod
    def validate_required_fields(spec: 'SequenceSpec') -> None:
        """
        Validate the variant, the number and sign of the alphas and the sizes

        Args:
            spec (SequenceSpec): The spec to validate

        Returns:
            None

        """
        if spec.variant not in SequenceSpec.VARIANTS:
            raise DomainError(f"Expected Spec Error || unknown variant `{spec.variant}`, expected one of "
                              f"{SequenceSpec.VARIANTS}")

        if spec.N < 1:
            raise DomainError(f"Expected Spec Error || N must be >= 1, got {spec.N}")

        if spec.k < 1:
            raise DomainError(f"Expected Spec Error || k must be >= 1, got {spec.k}")

        if spec.precision_cap < 1 or spec.value_bits < 1:
            raise DomainError("Expected Spec Error || precision_cap and value_bits must be positive")

        if spec.variant in (SequenceSpec.POWER_CHAIN, SequenceSpec.THEOREM_COMBINATION) and len(spec.alphas) != 1:
            raise DomainError(f"Expected Spec Error || {spec.variant} takes exactly one alpha, got {len(spec.alphas)}")

        if spec.variant in (SequenceSpec.NESTED_ALPHA, SequenceSpec.FLOORED_PRODUCT):
            for alpha in spec.alphas:
                if alpha().enclosure(spec.precision_start).hi <= 0:
                    raise DomainError(f"Expected Spec Error || {spec.variant} needs positive alphas, got {alpha}")

    @property
    def alpha(self) -> AlphaSpec:
        """ The single alpha of the power-chain and theorem-combination variants """
        return self.alphas[0]

    def to_dict(self) -> dict:
        return dict(variant=self.variant, alphas=[str(alpha) for alpha in self.alphas], k=self.k, m=self.m, N=self.N,
                    precision_cap=self.precision_cap, value_bits=self.value_bits)
