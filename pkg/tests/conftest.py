import pytest

from fillpairs.origami import Origami
from fillpairs.perms import parse_cycle


@pytest.fixture
def ori():
    """Build an origami from 1-based cycle notation."""

    def make(text, n=None):
        return Origami(parse_cycle(text, n))

    return make


_criteria: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return
    key = name[len("test_criterion_"):].split("[")[0]
    _criteria.setdefault(key, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        status = "PASS" if all(o == "passed" for o in _criteria[key]) else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {key}")
