import pytest

from structla.field import FieldCtx

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def F7():
    return FieldCtx(7)


@pytest.fixture(scope="session")
def F():
    return FieldCtx(65537)


@pytest.fixture(scope="session")
def acceptance():
    """record(number, title, ok, detail) stores one line for the final summary."""

    def record(number, title, ok, detail=""):
        _ACCEPTANCE[number] = (title, ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok, detail = _ACCEPTANCE[number]
        status = ok if isinstance(ok, str) else ("PASS" if ok else "FAIL")
        terminalreporter.write_line(f"{status} criterion {number} ({title}): {detail}")
