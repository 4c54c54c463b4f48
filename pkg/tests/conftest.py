from pathlib import Path

import pytest

from mayadeg.weyl import parse_coset, parse_flag

TESTDATA = Path(__file__).parent / "testdata"

# spaces swept exhaustively by the property and acceptance tests
SWEEP_FLAGS = ["1,2/4", "1,2,3/4", "2/5", "2/6", "1,3/5"]
ORACLE_FLAGS = ["1,2/4", "1,2,3/4", "2/5"]


def golden(name: str) -> str:
    return (TESTDATA / f"{name}.txt").read_text().rstrip("\n")


@pytest.fixture
def headline():
    shape = parse_flag("1,3,5,7,9/13")
    v = parse_coset(shape, "2|3,8|10,13|9,11|1,5")
    w = parse_coset(shape, "1|9,10|5,11|6,7|2,3")
    return shape, v, w


@pytest.fixture
def hook26():
    shape = parse_flag("1,3,5,7,9/12")
    return shape, parse_coset(shape, "2|3,8|10,12|9,11|1,5")


@pytest.fixture
def grassmannian_example():
    shape = parse_flag("8/12")
    return shape, parse_coset(shape, "1,2,3,5,8,9,11,12")


# acceptance criterion number -> [title, passed]
_criteria: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, [title, True])
    if report.failed or report.skipped:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, passed = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}")
