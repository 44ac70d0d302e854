import functools
import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from rsgpd import fixtures, search  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "data"


@functools.lru_cache(maxsize=None)
def scan3():
    return search.scan(3)


@pytest.fixture(scope="session")
def scan():
    return scan3()


@pytest.fixture
def SL2():
    return fixtures.sl2()


@pytest.fixture
def Z2():
    return fixtures.z2()


@pytest.fixture
def DISJ():
    return fixtures.disj()


@pytest.fixture
def NC():
    return fixtures.nc()


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.LINES, key=lambda l: int(l.split()[1])):
        terminalreporter.write_line(line)
