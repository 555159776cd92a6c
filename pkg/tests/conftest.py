import pytest

_results: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    num, title = mark.args
    prev = _results.get(num, (title, "PASS"))[1]
    status = "PASS" if rep.passed and prev == "PASS" else "FAIL"
    _results[num] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        title, status = _results[num]
        terminalreporter.write_line(f"criterion {num:>2} {status}  {title}")
