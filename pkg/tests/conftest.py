import pytest

from qhaar.algebra import generator


@pytest.fixture
def sl2():
    """The generators a, b, c, d of O(SL_q(2))."""
    return tuple(generator(2, i, j) for i, j in ((1, 1), (1, 2), (2, 1), (2, 2)))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
