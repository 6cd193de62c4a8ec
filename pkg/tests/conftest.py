import pytest

from pierik.recursion import clear_cache
from pierik.shapes import LG, OG, RectA

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def fresh_cache():
    clear_cache()
    yield
    clear_cache()


SMALL_SPACES = [RectA(2, 2), RectA(2, 3), RectA(3, 3), OG(1), OG(2), OG(3), OG(4), LG(1), LG(2), LG(3), LG(4)]
