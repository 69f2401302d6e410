import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from procsm import make_product_ambient  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def P1():
    return make_product_ambient([1])


@pytest.fixture
def P2():
    return make_product_ambient([2])


@pytest.fixture
def P1xP1():
    return make_product_ambient([1, 1])


@pytest.fixture
def P3():
    return make_product_ambient([3])


def exps(x):
    """Product-ambient class as a dense exponent-vector dict."""
    return dict(zip(x.ambient.basis, x.coeffs))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
