import random
from fractions import Fraction

import pytest

from biderlie import builtin


@pytest.fixture
def heisenberg():
    return builtin("heisenberg3")


@pytest.fixture
def rng():
    return random.Random(0)


def random_rational_vector(rng, n, span=3):
    return tuple(Fraction(rng.randint(-span, span)) for _ in range(n))
