import pytest
from hypothesis import settings

from kschur.tpoly import TPoly

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def tp(*coeffs):
    """``tp(0, 1)`` is t."""
    return TPoly(coeffs)


@pytest.fixture
def t():
    return TPoly((0, 1))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
