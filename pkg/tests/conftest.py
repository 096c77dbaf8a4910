import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20261016)


_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_record():
    return _ACCEPTANCE.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
