import json

import pytest

from lib.Devissage import Background
from lib.Devissage.DevissageMaster import DevissageMaster
from lib.Devissage.VerificationReport import FAIL, PASS, SKIP, SkipCheck, VerificationReport

from conftest import make_config


class RecordingLogger:
    def __init__(self, master):
        self.lines = []
        self.checks = []
        master.registerModule({"name": "Recording", "ref": self, "type": "Logging"})

    def debugLog(self, data):
        if data["debugLevel"] >= data["minLevel"]:
            self.lines.append((data["function"], data["message"]))

    def checkResult(self, check):
        self.checks.append(check)

    def frobeniusReport(self, report):
        pass


def test_registry(master):
    assert master.getModuleByName("master") is master
    assert master.getModulesByType("Logging") == []
    logger = RecordingLogger(master)
    assert master.getModuleByName("Recording") is logger
    # Second registration under the same name is ignored
    master.registerModule({"name": "Recording", "ref": object(), "type": "Logging"})
    assert master.getModuleByName("Recording") is logger


def test_release_module(master):
    RecordingLogger(master)
    master.releaseModule("lib.Devissage.Logging", "Recording")
    assert master.getModuleByName("Recording") is None
    # A released module cannot come back
    RecordingLogger(master)
    assert master.getModuleByName("Recording") is None


def test_debug_log_respects_level(tmp_path):
    master = DevissageMaster(make_config(tmp_path, debugLevel=8))
    logger = RecordingLogger(master)
    logger.lines.clear()
    master.debugLog(8, "Tester", "shown")
    master.debugLog(9, "Tester", "hidden")
    assert logger.lines == [("Tester    ", "shown")]


def test_settings_round_trip(master, tmp_path):
    report = VerificationReport("genus")
    report.check(master, "Genus", "genus_3", lambda: (7, 7))
    master.recordVerification(report)
    master.saveSettings()
    with open(tmp_path / "settings.json") as f:
        saved = json.load(f)
    assert saved["lastVerification"]["checks"] == {"genus_3": PASS}

    other = DevissageMaster(make_config(tmp_path))
    other.loadSettings()
    assert other.settings == saved


def test_corrupt_settings_are_replaced(master, tmp_path):
    (tmp_path / "settings.json").write_text("{not json")
    master.loadSettings()
    assert master.settings == {"lastVerification": {}}


def test_get_table_builds_once(tmp_path):
    master = DevissageMaster(make_config(tmp_path))
    calls = []
    master.getTable("answer", lambda: calls.append(1) or 42)
    assert master.getTable("answer", lambda: calls.append(1) or 0) == 42
    assert calls == [1]


def test_check_outcomes(master):
    logger = RecordingLogger(master)
    report = VerificationReport()

    def broken():
        raise ValueError("boom")

    def skipped():
        raise SkipCheck("disabled")

    report.check(master, "Tester", "equal", lambda: (1, 1))
    report.check(master, "Tester", "verdict", lambda: ("x", "y", True))
    report.check(master, "Tester", "differ", lambda: (1, 2))
    report.check(master, "Tester", "broken", broken)
    report.check(master, "Tester", "skipped", skipped)

    assert [c.status for c in report.checks] == [PASS, PASS, FAIL, FAIL, SKIP]
    assert report.checks[3].detail == "ValueError: boom"
    assert report.checks[4].detail == "disabled"
    assert report.count(FAIL) == 2
    assert report.exitCode == 1
    assert [c.name for c in report.failures] == ["differ", "broken"]
    assert len(logger.checks) == 5


@pytest.mark.parametrize("threads", [1, 4])
def test_run_tasks_keeps_submission_order(master, monkeypatch, threads):
    monkeypatch.setitem(Background.TASKS, "square", lambda m, task: task["n"] ** 2)
    tasks = [{"n": n} for n in range(20)]
    assert Background.run_tasks(master, "square", tasks, threads) == [n * n for n in range(20)]


def test_run_tasks_returns_exceptions(master, monkeypatch):
    def fail_on_odd(m, task):
        if task["n"] % 2:
            raise ArithmeticError(task["n"])
        return task["n"]

    monkeypatch.setitem(Background.TASKS, "even", fail_on_odd)
    results = Background.run_tasks(master, "even", [{"n": n} for n in range(4)], 2)
    assert results[0] == 0 and results[2] == 2
    assert isinstance(results[1], ArithmeticError)
    assert isinstance(results[3], ArithmeticError)


def test_thread_count(master):
    assert Background.thread_count(master) == 2
    assert Background.thread_count(master, 3) == 3
    assert Background.thread_count(master, 0) >= 1
