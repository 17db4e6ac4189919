import time

import pytest

from strategies import RING_DESCRIPTORS, RINGS


@pytest.fixture(params=RINGS, ids=RING_DESCRIPTORS)
def ring(request):
    return request.param


# -- acceptance reporting -----------------------------------------------------

_ACCEPTANCE: list = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    yield
    item._criterion_elapsed = time.perf_counter() - start


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        number, title = marker.args
        elapsed = getattr(item, "_criterion_elapsed", 0.0)
        _ACCEPTANCE.append((number, title, report.passed, elapsed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, elapsed in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title} ({elapsed:.2f}s)")
