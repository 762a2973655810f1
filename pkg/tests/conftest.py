import pytest

from routing_flowshop.instance import Instance, Job, ReducedNetwork

_acceptance_lines: list[str] = []


def make_instance(rho, jobs):
    """Instance from a reduced matrix and ``(node, a, b)`` triples; ids follow list order."""
    return Instance(ReducedNetwork(len(rho) - 2, rho), tuple(Job(k, v, a, b) for k, (v, a, b) in enumerate(jobs)))


def zero_rho(g):
    return [[0] * (g + 2) for _ in range(g + 2)]


@pytest.fixture
def record_criterion():
    def record(number: int, name: str, passed: bool, detail: str = ""):
        line = f"criterion {number} [{'PASS' if passed else 'FAIL'}] {name}"
        if detail:
            line += f" -- {detail}"
        _acceptance_lines.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
