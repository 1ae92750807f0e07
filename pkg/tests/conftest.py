import pytest

from tautilt.field import Field

FIELDS = {"gfp": Field(), "Q": Field.rationals()}


@pytest.fixture(params=list(FIELDS), ids=list(FIELDS))
def field(request):
    return FIELDS[request.param]


# acceptance criteria report one line each at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
