import pytest

from comaxdom.ringgraph import SimpleGraph


@pytest.fixture
def k3():
    return SimpleGraph.complete(3)


def random_graph(rng, order, density=0.5):
    edges = [(i, j) for i in range(order) for j in range(i + 1, order) if rng.random() < density]
    return SimpleGraph.from_edges(order, edges)


ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, ok: bool, summary: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {summary}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
