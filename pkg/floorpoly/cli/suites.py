""" Module with the seeded exact verification suites behind the `verify` command """
import logging
import random

from fractions import Fraction
from typing import Any, Callable, Optional

from ..chains import ChainInput, ab_seq
from ..exceptions import DomainError, VerificationError
from ..identity import chain_product, eval_identity, generate_terms
from ..lemma import verify_lemma1
from ..partition import mixed_expansion, power_identity_check
from ..tools import random_rational

logger = logging.getLogger(__name__)

RATIONAL_BOUND = 10 ** 6
LEMMA_BOUND = 1000


class SuiteResult(object):
    """ Outcome of one verification suite """
    def __init__(self, suite: str, trials: int, seed: int, parameters: dict):
        self.suite: str = suite
        self.trials: int = trials
        self.seed: int = seed
        self.parameters: dict = parameters
        self.passed: int = 0

    def __repr__(self):
        return f'SuiteResult({self.suite}, {self.passed}/{self.trials})'

    def summary(self) -> str:
        parameters = ' '.join(f'{key}={value}' for key, value in sorted(self.parameters.items()))
        return f'{self.suite} {parameters} seed={self.seed}: {self.passed}/{self.trials} passed'

    def to_dict(self) -> dict:
        return dict(suite=self.suite, trials=self.trials, seed=self.seed, parameters=self.parameters,
                    passed=self.passed)


def _run(result: SuiteResult, draw: Callable[[random.Random], Any], check: Callable[[Any], bool]) -> SuiteResult:
    rng = random.Random(result.seed)
    for trial in range(result.trials):
        sample = draw(rng)
        if not check(sample):
            raise VerificationError(
                f"Expected Verification Error || {result.suite} failed on trial {trial} with input {sample}", sample)
        result.passed += 1

    logger.info('%r', result)

    return result


def identity_suite(n: int, trials: int, seed: int) -> SuiteResult:
    """ The product identity on random rational vectors of length n, exact equality """
    terms = generate_terms(n)

    def draw(rng: random.Random) -> ChainInput:
        return ChainInput(random_rational(rng, RATIONAL_BOUND) for _ in range(n))

    def check(chain: ChainInput) -> bool:
        return eval_identity(chain, terms) == chain_product(chain)

    return _run(SuiteResult('identity', trials, seed, dict(n=n)), draw, check)


def partition_suite(n: int, trials: int, seed: int) -> SuiteResult:
    """ x^n through p_n(a) - p_n(-b) and through the mixed expansion, on random rationals """
    mixed = mixed_expansion(n)

    def draw(rng: random.Random) -> Fraction:
        return random_rational(rng, RATIONAL_BOUND)

    def check(x: Fraction) -> bool:
        sequences = ab_seq(x, n)
        return (power_identity_check(x, n)
                and mixed.evaluate({'a': sequences.a, 'b': sequences.b}) == x ** n
                and sequences.check_recurrence())

    return _run(SuiteResult('partition', trials, seed, dict(n=n)), draw, check)


def lemma1_suite(k: int, l: int, trials: int, seed: int) -> SuiteResult:
    """ The congruence for x^{:k} / l on random rationals in (0, 100) """
    def draw(rng: random.Random) -> Fraction:
        return random_rational(rng, LEMMA_BOUND, low=Fraction(0), high=Fraction(100))

    return _run(SuiteResult('lemma1', trials, seed, dict(k=k, l=l)), draw, lambda x: verify_lemma1(x, k, l))


SUITES = ('identity', 'partition', 'lemma1')


def run_suite(suite: str, trials: int, seed: int, n: Optional[int] = None, k: Optional[int] = None,
              l: Optional[int] = None) -> SuiteResult:
    """
    Run one named suite

    Args:
        suite (str): identity, partition or lemma1
        trials (int): Number of random inputs, >= 1
        seed (int): Seed of the input generator
        n (Optional[int]): Size for the identity and partition suites
        k (Optional[int]): Depth for the lemma1 suite
        l (Optional[int]): Scale for the lemma1 suite

    Returns:
        SuiteResult: The number of passing trials, raises VerificationError on the first failure

    """
    if trials < 1:
        raise DomainError(f"Expected Domain Error || trials must be >= 1, got {trials}")

    if suite == 'identity':
        return identity_suite(n or 4, trials, seed)
    if suite == 'partition':
        return partition_suite(n or 12, trials, seed)
    if suite == 'lemma1':
        return lemma1_suite(k or 3, l or 1, trials, seed)

    raise DomainError(f"Expected Domain Error || unknown suite `{suite}`, expected one of {SUITES}")
