from lib.Devissage.DevissageMaster import DevissageMaster
from lib.Devissage.Logging.CSVLogging import CSVLogging
from lib.Devissage.Logging.ConsoleLogging import ConsoleLogging
from lib.Devissage.VerificationReport import VerificationReport

from conftest import make_config


def logging_master(tmp_path, logging):
    config = make_config(tmp_path, debugLevel=1)
    config["logging"] = logging
    return DevissageMaster(config)


def test_disabled_modules_release_themselves(tmp_path):
    master = logging_master(tmp_path, {"Console": {"enabled": False}})
    master.registerModule({"name": "ConsoleLogging", "ref": ConsoleLogging(master), "type": "Logging"})
    master.registerModule({"name": "CSVLogging", "ref": CSVLogging(master), "type": "Logging"})
    assert master.getModulesByType("Logging") == []


def test_console_writes_to_stderr(tmp_path, capsys):
    master = logging_master(tmp_path, {"Console": {"enabled": True}})
    master.registerModule({"name": "ConsoleLogging", "ref": ConsoleLogging(master), "type": "Logging"})
    master.debugLog(1, "Tester", "hello")
    master.debugLog(2, "Tester", "too detailed")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "hello" in captured.err
    assert "too detailed" not in captured.err


def test_csv_check_rows(tmp_path):
    path = tmp_path / "csv"
    master = logging_master(tmp_path, {"CSV": {"enabled": True, "path": str(path), "quoteColumns": False}})
    master.registerModule({"name": "CSVLogging", "ref": CSVLogging(master), "type": "Logging"})
    report = VerificationReport()
    report.check(master, "Genus", "genus l=3", lambda: (7, 7))
    report.check(master, "Genus", "genus l=5", lambda: (25, 24))
    rows = (path / "checks.csv").read_text().splitlines()
    assert [row.split(",")[2:6] for row in rows] == [
        ["Genus", "genus l=3", "pass", "7"],
        ["Genus", "genus l=5", "fail", "25"],
    ]


def test_csv_mute(tmp_path):
    path = tmp_path / "csv"
    master = logging_master(
        tmp_path, {"CSV": {"enabled": True, "path": str(path), "mute": {"Checks": 1}}}
    )
    master.registerModule({"name": "CSVLogging", "ref": CSVLogging(master), "type": "Logging"})
    VerificationReport().check(master, "Genus", "genus l=3", lambda: (7, 7))
    assert not (path / "checks.csv").exists()
