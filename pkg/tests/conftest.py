from __future__ import annotations

import pytest

from .oracles import all_labeled


@pytest.fixture(scope="session")
def small_graphs():
    """Every labeled graph on 1..5 vertices."""
    return [g for n in range(1, 6) for g in all_labeled(n)]


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
