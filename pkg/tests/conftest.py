"""Shared fixtures: M-spaces of the standard examples, built once per session."""

from functools import lru_cache

import pytest

from mspace_go.geometry.flag import build_flag
from mspace_go.geometry.mspace import MSpace, build_mspace
from mspace_go.models.algebra import PaintedDiagram, RootSystemType


@lru_cache(maxsize=None)
def mspace(family: str, rank: int, painted: tuple) -> MSpace:
    return build_mspace(build_flag(PaintedDiagram.of(RootSystemType.of(family, rank), painted)))


@pytest.fixture(scope="session")
def a2_full():
    """A2{1,2}: s = 3, dim s = 2, K1 trivial."""
    return mspace("A", 2, (1, 2))


@pytest.fixture(scope="session")
def cp2():
    """A2{1}: the M-space SU(3)/SU(2) over CP^2."""
    return mspace("A", 2, (1,))


@pytest.fixture(scope="session")
def a3_full():
    return mspace("A", 3, (1, 2, 3))


@pytest.fixture(scope="session")
def b2_1():
    """B2{1}: s = 1, m of dimension 6 splitting 3 + 3."""
    return mspace("B", 2, (1,))


@pytest.fixture(scope="session")
def b2_2():
    """B2{2}: s = 2 with dim m2 = 2."""
    return mspace("B", 2, (2,))


@pytest.fixture(scope="session")
def g2_1():
    """G2{1}: s = 3, dim s = 1, summand dims 4, 2, 4."""
    return mspace("G", 2, (1,))


@pytest.fixture(scope="session")
def b3_3():
    """B3{3}: s = 2 with both summands irreducible."""
    return mspace("B", 3, (3,))


@pytest.fixture(scope="session")
def c3_2():
    """C3{2}: s = 2 with both summands split."""
    return mspace("C", 3, (2,))
