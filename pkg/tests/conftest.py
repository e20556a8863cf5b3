import random

import pytest

from skewcodec.gf import GF
from skewcodec.mixedcode import CodeContext


@pytest.fixture(scope="session")
def f9():
    return GF(3, 2, [2, 2, 1])


@pytest.fixture(scope="session")
def f27():
    return GF(3, 3, [1, 2, 0, 1])


@pytest.fixture(scope="session")
def ctx9(f9):
    return CodeContext(f9, 1)


@pytest.fixture(scope="session")
def ctx27(f27):
    return CodeContext(f27, 1)


@pytest.fixture
def rng():
    return random.Random(12345)
