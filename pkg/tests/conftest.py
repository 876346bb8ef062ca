import pytest

from posetmodels import build_lattice, load, validate_relative


@pytest.fixture(scope="session")
def two_structures():
    return load("two-structures")


@pytest.fixture(scope="session")
def forced():
    return load("forced")


@pytest.fixture(scope="session")
def s2of3_fail():
    return load("s2of3-fail")


@pytest.fixture(scope="session")
def trunc1():
    return load("trunc-1")


@pytest.fixture(scope="session")
def two_chain():
    lat = build_lattice(["bot", "top"], [("bot", "top")])
    return validate_relative(lat, [], add_identities=True)
