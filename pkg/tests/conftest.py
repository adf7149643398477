"""Shared fixtures: the four standard small-field configurations."""

import pytest

from hermline import make_field


@pytest.fixture(scope="session")
def f2():
    return make_field(2)


@pytest.fixture(scope="session")
def f3():
    return make_field(3)


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 2, "frobenius")


@pytest.fixture(scope="session")
def f9():
    return make_field(3, 2, "frobenius")
