import random

import pytest

from geometry.weight_lattice import RootSystemA, Weight


@pytest.fixture
def rng():
    return random.Random(20240601)


def random_weight(rng: random.Random, rs: RootSystemA, low: int, high: int) -> Weight:
    return Weight(tuple(rng.randint(low, high) for _ in range(rs.rank)))


@pytest.fixture
def sl4():
    return RootSystemA(4)


@pytest.fixture
def sl5():
    return RootSystemA(5)
