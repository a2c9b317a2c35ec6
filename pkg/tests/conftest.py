import pytest

from tempered_atlas import catalog


@pytest.fixture
def sp4r():
    return catalog("sp4r")


@pytest.fixture
def sl2r():
    return catalog("sl2r")


@pytest.fixture
def sl2c():
    return catalog("sl2c")


@pytest.fixture
def su21():
    return catalog("su21")
