import time

import pytest

SUITE_BUDGET_S = 60.0
_criteria = {}
_session = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_sessionstart(session):
    _session["start"] = time.perf_counter()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        key = marker.args
        _criteria[key] = _criteria.get(key, True) and report.passed


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _session.get("start", time.perf_counter())
    _session["elapsed"] = elapsed
    # the property-suite criterion also bounds the wall time of the full run
    for key in list(_criteria):
        if key[0] == 6 and elapsed >= SUITE_BUDGET_S:
            _criteria[key] = False
            session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), passed in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}")
    terminalreporter.write_line(f"suite wall time: {_session['elapsed']:.1f} s (budget {SUITE_BUDGET_S:.0f} s)")
