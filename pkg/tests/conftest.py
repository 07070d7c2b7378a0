import pytest

# Frozen from an independent sympy expansion of (Tnd**n)[0,0] * (A - 1/A)/(q - 1/q).
# Odd n: the invariant itself.  Even n: the numerator over (q - 1/q).
TWO_STRAND_ORACLE = {
    1: {(0, 2): -1},
    2: {(-2, 3): 1, (0, 1): -1, (0, 3): -1, (2, 3): 1},
    3: {(-2, 4): -1, (0, 2): 1, (2, 4): -1},
    4: {(-4, 5): 1, (-2, 3): -1, (-2, 5): -1, (0, 3): 1, (0, 5): 1, (2, 3): -1,
        (2, 5): -1, (4, 5): 1},
    5: {(-4, 6): -1, (-2, 4): 1, (0, 6): -1, (2, 4): 1, (4, 6): -1},
    6: {(-6, 7): 1, (-4, 5): -1, (-4, 7): -1, (-2, 5): 1, (-2, 7): 1, (0, 5): -1,
        (0, 7): -1, (2, 5): 1, (2, 7): 1, (4, 5): -1, (4, 7): -1, (6, 7): 1},
    7: {(-6, 8): -1, (-4, 6): 1, (-2, 8): -1, (0, 6): 1, (2, 8): -1, (4, 6): 1, (6, 8): -1},
}

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria.append((mark.args[0], mark.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_criteria):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
