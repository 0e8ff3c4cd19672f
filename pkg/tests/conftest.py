import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[str, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    label, text = marker.args
    _criteria.setdefault(label, [text, True])
    if not report.passed:
        _criteria[label][1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")

    def key(label):
        num = "".join(ch for ch in label if ch.isdigit())
        return (int(num or 0), label)

    for label in sorted(_criteria, key=key):
        text, ok = _criteria[label]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {label}: {text}")
