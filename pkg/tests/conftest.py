import os
from collections import OrderedDict

import pytest

from paretofair import ObjectiveSchema, SolutionPoint, SolutionSet, canonicalize

_results: "OrderedDict[str, dict]" = OrderedDict()


def make_set(name, coords, ids=None):
    """SolutionSet over canonical coordinates with all-Max [0, 1] axes."""
    n = len(coords[0])
    schema = ObjectiveSchema.from_names([f"obj{i + 1}" for i in range(n)])
    ids = ids or [f"p{i}" for i in range(len(coords))]
    pts = [SolutionPoint(i, canonicalize(c, schema)) for i, c in zip(ids, coords)]
    return SolutionSet(name, schema, pts)


@pytest.fixture
def data_dir():
    return os.path.join(os.path.dirname(__file__), "data")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        cid, title = marker.args
        entry = _results.setdefault(str(cid), {"title": title, "passed": 0, "failed": [], "skipped": 0})
        if report.passed:
            entry["passed"] += 1
        elif report.skipped:
            entry["skipped"] += 1
        else:
            entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted(_results, key=lambda c: int(c)):
        e = _results[cid]
        total = e["passed"] + len(e["failed"])
        status = "PASS" if not e["failed"] and e["passed"] else "FAIL"
        line = f"[{status}] criterion {cid}: {e['title']} ({e['passed']}/{total} checks)"
        if e["failed"]:
            line += " failing: " + ", ".join(e["failed"])
        tr.write_line(line)
