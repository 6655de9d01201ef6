from __future__ import annotations

import pytest

from qecc_forge import field_new, kuniform_code, mds_generator, modified_shorten, shorten


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run long-mode tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None or report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    outcome = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    _RESULTS.setdefault(crit, []).append(outcome)


_RESULTS: dict[tuple, list[str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcomes in sorted(_RESULTS.items()):
        if "FAIL" in outcomes:
            verdict = "FAIL"
        elif "PASS" in outcomes:
            verdict = "PASS"
        else:
            verdict = "SKIP"
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="long mode: pass --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def F3():
    return field_new(3)


@pytest.fixture(scope="session")
def F5():
    return field_new(5, 3)


@pytest.fixture(scope="session")
def F7():
    return field_new(7)


@pytest.fixture(scope="session")
def G43(F3):
    return mds_generator(F3, 2, 4)


@pytest.fixture(scope="session")
def G65(F5):
    return mds_generator(F5, 3, 6)


@pytest.fixture(scope="session")
def code312(G43):
    return shorten(G43, 1)


@pytest.fixture(scope="session")
def code422(G65):
    return shorten(G65, 2)


@pytest.fixture(scope="session")
def code513(G65):
    return shorten(G65, 1)


@pytest.fixture(scope="session")
def code604(G65):
    return kuniform_code(G65)


@pytest.fixture(scope="session")
def code412(F3):
    return modified_shorten(F3)


@pytest.fixture(scope="session")
def code613(F5):
    return modified_shorten(F5)
