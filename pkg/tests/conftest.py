import pytest

CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        CRITERIA[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(CRITERIA):
        number = int(name.split("_")[2])
        title = name.split("_", 3)[3].replace("_", " ")
        terminalreporter.write_line(f"criterion {number:2d}: {CRITERIA[name]}  {title}")


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("STACKSORTING_CACHE_DIR", str(d))
    return d
