import random

import pytest

from coda.encoding import word
from coda.terms import COLON, Coda

SAFE_WORDS = ("pass", "null", "const", "left", "right", "bool", "not",
              "first", "rev", "a", "b", "c")


def random_coda(rng: random.Random, depth: int) -> Coda:
    roll = rng.random()
    if depth <= 0 or roll < 0.35:
        return COLON
    if roll < 0.7:
        return word(rng.choice(SAFE_WORDS))
    return Coda(random_data(rng, depth - 1), random_data(rng, depth - 1))


def random_data(rng: random.Random, depth: int = 2, max_width: int = 3):
    return tuple(random_coda(rng, depth) for _ in range(rng.randrange(max_width + 1)))


@pytest.fixture
def rng():
    return random.Random(20230823)
