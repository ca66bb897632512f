import pytest

_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Call with (number, ok, detail); records one line and asserts ok."""

    def report(number, ok, detail=""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        _ACCEPTANCE[number] = line
        print(line)
        assert ok, line

    return report


def pytest_runtest_logreport(report):
    # a criterion that errored before reporting still gets a FAIL line
    if report.failed and "test_acceptance" in report.nodeid:
        mark = report.nodeid.rsplit("criterion_", 1)
        if len(mark) == 2:
            n = int(mark[1].split("_")[0])
            _ACCEPTANCE.setdefault(n, f"criterion {n}: FAIL  {report.nodeid}")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[n])
