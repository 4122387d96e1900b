import sys
from pathlib import Path

import pytest

from latcong.lattice import catalogue

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def c2():
    return catalogue("chain(2)")


@pytest.fixture(scope="session")
def c3():
    return catalogue("chain(3)")


@pytest.fixture(scope="session")
def c4():
    return catalogue("chain(4)")


@pytest.fixture(scope="session")
def b2():
    return catalogue("boolean(2)")


@pytest.fixture(scope="session")
def b3():
    return catalogue("boolean(3)")


@pytest.fixture(scope="session")
def m3():
    return catalogue("M3")


@pytest.fixture(scope="session")
def n5():
    return catalogue("N5")


CATALOGUE_NAMES = ["chain(2)", "chain(3)", "chain(4)", "chain(5)",
                   "boolean(2)", "boolean(3)", "M3", "N5"]

DISTRIBUTIVE_NAMES = ["chain(2)", "chain(3)", "chain(4)", "chain(5)",
                      "chain(6)", "boolean(2)", "boolean(3)"]
