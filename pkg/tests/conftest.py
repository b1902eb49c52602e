import os

import pytest


DEEP = os.environ.get("COXNEST_DEEP") == "1"


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    # keep test runs from touching ~/.cache
    monkeypatch.setenv("COXNEST_CACHE", str(tmp_path / "cache"))


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda l: int(l.split()[2].rstrip(':'))):
            terminalreporter.write_line(line)
