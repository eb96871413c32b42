import json
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

SMALL_PRIMES = (5, 7, 11, 13)


@pytest.fixture(scope="session")
def golden():
    def load(name):
        return json.loads((DATA / name).read_text())

    return {"12": load("golden_p11_12.json"), "13": load("golden_p11_13.json")}


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
