from collections import defaultdict
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

_criteria = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _criteria[props["criterion"]].append((report.nodeid, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for (num, title), results in sorted(_criteria.items()):
        failed = [nid.split("::")[-1] for nid, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {num}: {status}  {title} ({len(results) - len(failed)}/{len(results)} checks)"
        tr.write_line(line)
        for name in failed:
            tr.write_line(f"    failed: {name}")


@pytest.fixture(scope="session")
def fig1_path():
    return FIXTURES / "fig1.ooa"
