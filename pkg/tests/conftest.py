import pytest

from frc.numerics import ctx

# filled by tests/test_acceptance.py, printed in the terminal summary
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def rel_err(got, want):
    got, want = ctx.mpf(got), ctx.mpf(want)
    return abs(got - want) / abs(want)


@pytest.fixture
def mpf():
    return ctx.mpf


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
