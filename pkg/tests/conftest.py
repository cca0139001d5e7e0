from __future__ import annotations

from collections import OrderedDict

import pytest

_CRITERIA: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_collection_modifyitems(items: list[pytest.Item]) -> None:
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is None:
            continue
        number, title = mark.args
        entry = _CRITERIA.setdefault(number, {"title": title, "outcomes": [], "notes": []})
        entry.setdefault("nodeids", set()).add(item.nodeid)


def pytest_runtest_logreport(report: pytest.TestReport) -> None:
    for entry in _CRITERIA.values():
        if report.nodeid in entry.get("nodeids", ()):
            if report.when == "call" or report.outcome != "passed":
                entry["outcomes"].append(report.outcome)
                for name, value in report.user_properties:
                    if name == "detail":
                        entry["notes"].append(str(value))


def pytest_terminal_summary(terminalreporter) -> None:
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        outcomes = entry["outcomes"]
        if not outcomes:
            verdict = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            verdict = "PASS"
        else:
            verdict = "FAIL"
        detail = "; ".join(entry["notes"])
        line = f"criterion {number}: {verdict:7} {entry['title']}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
