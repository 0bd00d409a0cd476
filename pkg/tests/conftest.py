from pathlib import Path

import pytest

from posemi import LeSemigroup, OrderedSemigroup
from posemi.enumeration import (
    EnumerationConfig,
    enumerate_le_semigroups,
    enumerate_ordered_semigroups,
)

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

CHAIN3_JOIN = [[0, 1, 2], [1, 1, 2], [2, 2, 2]]
CHAIN3_MEET = [[0, 0, 0], [0, 1, 1], [0, 1, 2]]


def make_n2():
    """Two-element null semigroup with 0 < a."""
    return OrderedSemigroup([[0, 0], [0, 0]], [[1, 1], [0, 1]])


def make_s2l():
    """Two-element left-zero semigroup, discrete order."""
    return OrderedSemigroup([[0, 0], [1, 1]], [[1, 0], [0, 1]])


def make_z2():
    """Two-element group, discrete order."""
    return OrderedSemigroup([[0, 1], [1, 0]], [[1, 0], [0, 1]])


def make_one():
    """One-element semigroup."""
    return OrderedSemigroup([[0]], [[1]])


def make_l3null():
    """Chain 0 < a < e with all products 0."""
    return LeSemigroup([[0, 0, 0]] * 3, CHAIN3_JOIN, CHAIN3_MEET, top=2)


def make_l3meet():
    """Chain 0 < a < e with x*y = min(x, y)."""
    return LeSemigroup(CHAIN3_MEET, CHAIN3_JOIN, CHAIN3_MEET, top=2)


@pytest.fixture
def n2():
    return make_n2()


@pytest.fixture
def s2l():
    return make_s2l()


@pytest.fixture
def l3null():
    return make_l3null()


@pytest.fixture
def l3meet():
    return make_l3meet()


def _ordered_universe(max_order, dedup="up_to_iso"):
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_ordered_semigroups(EnumerationConfig(order=n, dedup=dedup)))
    return out


def _le_universe(max_order, dedup="up_to_iso"):
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_le_semigroups(EnumerationConfig(order=n, dedup=dedup)))
    return out


@pytest.fixture(scope="session")
def ordered_universe_3():
    """Ordered semigroups of order <= 3, one per isomorphism class."""
    return _ordered_universe(3)


@pytest.fixture(scope="session")
def ordered_universe_4():
    """Ordered semigroups of order <= 4, one per isomorphism class."""
    return _ordered_universe(4)


@pytest.fixture(scope="session")
def le_universe_3():
    """Lattice-ordered semigroups of order <= 3, one per isomorphism class."""
    return _le_universe(3)


@pytest.fixture(scope="session")
def le_universe_4():
    """Lattice-ordered semigroups of order <= 4, one per isomorphism class."""
    return _le_universe(4)
