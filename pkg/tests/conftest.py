import re

_AC = re.compile(r"test_AC(\d+)_")
_results = {}


def pytest_runtest_logreport(report):
    m = _AC.search(report.nodeid)
    if not m:
        return
    key = f"AC{int(m.group(1)):02d}"
    if report.when == "call" or report.failed:
        if report.failed or key not in _results:
            _results[key] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results):
        terminalreporter.write_line(f"{key} {_results[key]}")
