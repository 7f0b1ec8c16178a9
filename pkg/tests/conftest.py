import pytest

from config import TestConfig
from fincat import cyclic_group
from oracle import fix_a, fix_b, fix_c, fix_d, fix_e


@pytest.fixture(scope="session")
def xm_a():
    return fix_a()


@pytest.fixture(scope="session")
def xm_b():
    return fix_b()


@pytest.fixture(scope="session")
def xm_c():
    return fix_c()


@pytest.fixture(scope="session")
def pair_d():
    return fix_d()


@pytest.fixture(scope="session")
def prex_e():
    return fix_e()


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture
def config():
    return TestConfig


@pytest.fixture
def fixture_file(config):
    """Path of a shipped fixture document, by fixture name."""
    by_name = {path.name.split(".")[0]: path for path in config.FIXTURE_DIR.glob("*.json")}

    def _path(name: str) -> str:
        return str(by_name[name])

    return _path
