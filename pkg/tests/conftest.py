import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from givenness import Entity, WorldModel  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_RESULTS = []


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def mugs():
    return WorldModel((
        Entity("m1", "mug", {"color": "red"}, (0.3, 0.0, 0.0)),
        Entity("m2", "mug", {"color": "blue"}, (1.5, 0.0, 0.0)),
        Entity("b1", "book", {"color": "red"}),
    ))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {name}")


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion for the summary."""
    def record(number, name):
        ACCEPTANCE_RESULTS.append((number, name, False))
        index = len(ACCEPTANCE_RESULTS) - 1

        def passed():
            ACCEPTANCE_RESULTS[index] = (number, name, True)
            print(f"[PASS] {number}. {name}")
        return passed
    return record
