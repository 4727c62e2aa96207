import pytest
from hypothesis import settings

from horochow.catalog import SpecContext, builtin

settings.register_profile("repo", max_examples=40, deadline=None)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def g2():
    return SpecContext(builtin("g2"))


@pytest.fixture(scope="session")
def spin7():
    return SpecContext(builtin("spin7"))


_VERDICTS = []


@pytest.fixture
def verdict():
    """Record and print ``PASS/FAIL criterion N: text``; fails the test on any problem."""

    def record(number, text, problems):
        line = f"{'PASS' if not problems else 'FAIL'} criterion {number}: {text}"
        if problems:
            line += " [" + "; ".join(problems) + "]"
        _VERDICTS.append((number, line))
        print(line)
        assert not problems, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_VERDICTS):
            terminalreporter.write_line(line)
