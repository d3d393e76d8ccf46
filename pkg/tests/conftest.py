import pytest

from skewlat.catalog import enumerate_catalog, nc5
from skewlat.core import chain, direct_product, rectangular

# one "ACCEPTANCE n (...): PASS/FAIL" line per criterion, printed after the
# run so output capture cannot swallow them
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def catalogs():
    """Catalogs indexed by order, up to order 4."""
    return {n: enumerate_catalog(n) for n in range(1, 5)}


@pytest.fixture(scope="session")
def catalog5():
    return enumerate_catalog(5)


@pytest.fixture(scope="session")
def nc5_right():
    return nc5("right")


@pytest.fixture(scope="session")
def nc5_left():
    return nc5("left")


@pytest.fixture(scope="session")
def samples(nc5_right, nc5_left):
    """A named mix of structurally different small algebras."""
    return {
        "chain3": chain(3),
        "rect22": rectangular(2, 2),
        "rect31": rectangular(3, 1),
        "chain2xrect22": direct_product(chain(2), rectangular(2, 2)),
        "nc5-right": nc5_right,
        "nc5-left": nc5_left,
    }
