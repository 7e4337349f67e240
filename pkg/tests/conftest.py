import itertools

import pytest


def all_words(max_len, alphabet="EWNS"):
    for n in range(max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


# The six shuffles of V = NS with H = EE, as listed alongside the definition of a shuffle.
LISTED_SHUFFLES = {"EENS", "ENES", "NEES", "ENSE", "NESE", "NSEE"}


@pytest.fixture
def listed_shuffles():
    return set(LISTED_SHUFFLES)


# -- one summary line per acceptance criterion --------------------------------

_criteria: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        verdict = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        _criteria[number] = (verdict, f"{title} ({call.duration:.1f} s)")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        verdict, text = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {text}")
