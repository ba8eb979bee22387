"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""
from __future__ import annotations

import pytest

_CRITERIA: dict[int, dict] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when not in ("setup", "call"):
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "detail": ""})
    if call.excinfo is not None:
        entry["ok"] = False
        entry["detail"] = call.excinfo.exconly().splitlines()[0][:160]
    elif call.when == "call":
        detail = dict(item.user_properties).get("detail")
        if detail:
            entry["detail"] = detail


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        status = "PASS" if e["ok"] else "FAIL"
        line = f"[{status}] {number:>2}. {e['title']}"
        if e["detail"]:
            line += f" | {e['detail']}"
        terminalreporter.write_line(line)


@pytest.fixture
def detail(request):
    """Attach a one-line measurement to the criterion summary."""
    def put(text: str) -> None:
        request.node.user_properties.append(("detail", text))
    return put
