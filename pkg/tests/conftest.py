import random

import pytest

from mycimm.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE: list[tuple[int, bool, str]] = []


@pytest.fixture
def accept():
    """Record a criterion outcome for the end-of-run summary, then assert it."""
    def record(number: int, ok: bool, detail: str):
        ACCEPTANCE.append((number, ok, detail))
        assert ok, f"criterion {number} failed: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
