"""Per-criterion PASS/FAIL summary for tests marked ``acceptance(k, title)``."""

from collections import OrderedDict

_results: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(k, title): test belongs to acceptance criterion k")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark:
            k, title = mark.args
            _results.setdefault(k, {"title": title, "failed": [], "passed": 0, "skipped": 0})
            item.user_properties.append(("criterion", k))


def pytest_runtest_logreport(report):
    k = dict(report.user_properties).get("criterion")
    if k is None:
        return
    entry = _results[k]
    if report.failed:
        entry["failed"].append(report.nodeid)
    elif report.when == "call" and report.passed:
        entry["passed"] += 1
    elif report.skipped:
        entry["skipped"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        e = _results[k]
        if e["failed"]:
            status = "FAIL"
        elif e["passed"] and not e["skipped"]:
            status = "PASS"
        else:
            status = "INCOMPLETE"
        terminalreporter.write_line(f"criterion {k:2d} {status}  {e['title']} ({e['passed']} checks)")
        for nodeid in e["failed"]:
            terminalreporter.write_line(f"    failed: {nodeid}")
