import random

import pytest

from bentkit import gf2n


@pytest.fixture(scope="session")
def g4():
    return gf2n.make_field(2)


@pytest.fixture(scope="session")
def g16():
    return gf2n.make_field(4)


@pytest.fixture(scope="session")
def g64():
    return gf2n.make_field(6)


@pytest.fixture(scope="session")
def g256():
    return gf2n.make_field(8)


@pytest.fixture()
def rng():
    return random.Random(0x5EED)
