import pytest

_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Register the running test as an acceptance criterion with a label."""

    def register(label):
        _CRITERIA[request.node.nodeid] = label

    return register


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.nodeid in _CRITERIA:
        _CRITERIA[item.nodeid] = (_CRITERIA[item.nodeid], report.passed)


def pytest_terminal_summary(terminalreporter):
    rows = [v for v in _CRITERIA.values() if isinstance(v, tuple)]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in rows:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")
