import re

_ACCEPTANCE: dict[str, str] = {}
_NAME = re.compile(r"test_acceptance\.py::test_(ac\d+)_(\w+)")


def pytest_runtest_logreport(report):
    match = _NAME.search(report.nodeid)
    if not match:
        return
    label = f"{match.group(1).upper()} {match.group(2)}"
    if report.when == "call" or report.outcome != "passed":
        _ACCEPTANCE[label] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{_ACCEPTANCE[label]}  {label}")
