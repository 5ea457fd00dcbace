import random

from fractions import Fraction

import pytest

from floorpoly.tools import random_rational


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def rational_vector(rng):
    def draw(n, bound=10 ** 6):
        return [random_rational(rng, bound) for _ in range(n)]

    return draw


@pytest.fixture
def half_integers():
    return [Fraction(3, 2), Fraction(5, 2), Fraction(7, 2)]
