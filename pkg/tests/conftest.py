import pytest

from umbral_clifford import CalculusConfig
from umbral_clifford.parser import parse_polynomial

# family grid shared by the operator tests: (family, h, variant)
GRID = [
    ("continuum", None, "plain"),
    ("forward", 1, "plain"),
    ("forward", "1/2", "plain"),
    ("central", 1, "plain"),
    ("forward", 1, "symmetrized"),
    ("central", 1, "symmetrized"),
]
PLAIN_GRID = [g for g in GRID if g[2] == "plain"]


def grid_id(g):
    fam, h, var = g
    return fam if h is None else f"{fam}-h{h}-{var}".replace("/", "_")


@pytest.fixture
def P():
    """``P(text, n=2)`` parses a polynomial."""
    def parse(text, n=2):
        return parse_polynomial(text, n)
    return parse


def make_cfg(g, n):
    fam, h, var = g
    return CalculusConfig(n, fam, h, var)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    lines = test_acceptance.RESULTS + test_acceptance.NOTES
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
