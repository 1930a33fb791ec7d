import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# criterion (id, title) -> {"passed": bool, "detail": str}
_acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        outcome.get_result().acceptance = tuple(marker.args)


def pytest_runtest_logreport(report):
    key = getattr(report, "acceptance", None)
    if key is None:
        return
    entry = _acceptance.setdefault(key, {"passed": True, "detail": ""})
    if report.failed:
        entry["passed"] = False
    for name, value in report.user_properties:
        if name == "detail":
            entry["detail"] = value


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (cid, title), entry in sorted(_acceptance.items()):
        tag = "PASS" if entry["passed"] else "FAIL"
        detail = f"  ({entry['detail']})" if entry["detail"] else ""
        terminalreporter.write_line(f"{tag}  [{cid:>2}] {title}{detail}")
