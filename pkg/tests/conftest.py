import pytest

from hedonic import corpus


@pytest.fixture
def ex1():
    return corpus.example1()


@pytest.fixture
def ex2():
    return corpus.example2()


@pytest.fixture
def p2():
    return corpus.prop2()


@pytest.fixture
def p3():
    return corpus.prop3()


# lines recorded by the acceptance suite, shown after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
