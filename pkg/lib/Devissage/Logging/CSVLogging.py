# CSVLogging module. Appends check results and Frobenius reports to CSV files

from datetime import datetime
import os
import time


class CSVLogging:

    config = None
    configConfig = None
    configLogging = None
    quoteColumns = True
    status = False

    def __init__(self, master):
        self.master = master
        self.config = master.config
        try:
            self.configConfig = master.config["config"]
        except KeyError:
            self.configConfig = {}
        try:
            self.configLogging = master.config["logging"]["CSV"]
        except KeyError:
            self.configLogging = {}
        self.status = self.configLogging.get("enabled", False)

        # Unload if this module is disabled or misconfigured
        if not self.status or not self.configLogging.get("path", None):
            self.master.releaseModule("lib.Devissage.Logging", "CSVLogging")
            return None

        os.makedirs(self.configLogging["path"], exist_ok=True)
        self.quoteColumns = self.configLogging.get("quoteColumns", True)

        # Initialize the mute config tree if it is not already
        if not self.configLogging.get("mute", None):
            self.configLogging["mute"] = {}

    def debugLog(self, logdata):
        # Debug output is not recorded in CSV form
        return

    def delimit(self):
        # Return the configured delimiter
        return self.configLogging.get("delimiter", ",")

    def qt(self, string):
        # Perform optional quoting of CSV data
        if self.quoteColumns:
            return '"' + str(string).replace('"', '""') + '"'
        return str(string)

    def writeRow(self, fileName, values):
        row = [int(time.time()), datetime.now().strftime("%Y-%m-%d %H:%M:%S")] + list(values)
        with open(os.path.join(self.configLogging["path"], fileName), "a+") as csv:
            csv.write(self.delimit().join(self.qt(v) for v in row) + "\n")

    def checkResult(self, check):
        # Check if this status is muted
        if self.configLogging["mute"].get("Checks", 0):
            return None

        self.writeRow(
            "checks.csv",
            [check.module, check.name, check.status, check.expected, check.observed, check.millis],
        )

    def frobeniusReport(self, report):
        # Check if this status is muted
        if self.configLogging["mute"].get("Frobenius", 0):
            return None

        data = report.asDict()
        self.writeRow(
            "frobenius.csv",
            [
                data["p"],
                data["sign"],
                data["cycle_type"],
                " ".join(data["classes"]),
                " ".join(data["ap_mod3"]),
                data["millis"],
            ],
        )
