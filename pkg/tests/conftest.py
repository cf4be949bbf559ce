import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    key = request.node.name
    _ACCEPTANCE[key] = None

    def record(label):
        _ACCEPTANCE[key] = label

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.name in _ACCEPTANCE:
        label = _ACCEPTANCE[item.name] or item.name
        _ACCEPTANCE[item.name] = (label, rep.passed)


def pytest_terminal_summary(terminalreporter):
    rows = [v for v in _ACCEPTANCE.values() if isinstance(v, tuple)]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in rows:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")
