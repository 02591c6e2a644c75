import pytest

from mlsfr import LinkParams, build_layout


@pytest.fixture(scope="session")
def params():
    return LinkParams()


@pytest.fixture(scope="session")
def layout():
    return build_layout(1.0)
