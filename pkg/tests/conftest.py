import pytest

from hbic import AttributeType, HeteroMatrix

_ACCEPTANCE = []


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    def report(criterion, ok, detail=""):
        _ACCEPTANCE.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
        return ok
    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def mixed_matrix():
    # numeric [0,2,1,4,-2,1] has pvar 10/3; rows 0..2 have pvar 2/3 (ratio 0.2)
    return HeteroMatrix.from_columns(
        ["num", "cat"],
        [AttributeType.NUMERIC, AttributeType.CATEGORICAL],
        [[0, 2, 1, 4, -2, 1], ["a", "a", "b", "c", "c", "c"]],
    )
