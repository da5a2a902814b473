"""Shared factories for the test suite.

Field and fixture objects are cached at module level; catalogs are memoized
inside the package already, so tests only need to clear the store when they
deliberately compare enumeration strategies.
"""

from functools import cache

import pytest

import quiverfold as qf


@cache
def field(p, m=1):
    return qf.make_field(p, m)


@cache
def a2_quiver():
    return qf.validate_quiver(["u", "v"], [("r", "u", "v")])


@cache
def a3_quiver():
    return qf.validate_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "3", "2")])


@pytest.fixture
def F2():
    return field(2)


@pytest.fixture
def F3():
    return field(3)


@pytest.fixture
def F4():
    return field(2, 2)


@pytest.fixture
def F5():
    return field(5)


@pytest.fixture
def F7():
    return field(7)


@pytest.fixture
def a2():
    return a2_quiver()


@pytest.fixture
def a3():
    return a3_quiver()


@pytest.fixture
def a3_flip():
    return qf.build_a3_flip()


@pytest.fixture
def dtilde4():
    return qf.build_dtilde4()


@pytest.fixture
def counterexample():
    return qf.build_counterexample()
