# ConsoleLogging module. Provides output to console for logging.
#
# Standard output carries the reports, so everything here goes to stderr.

import sys

from termcolor import colored

STATUS_COLOURS = {"pass": "green", "fail": "red", "skip": "yellow"}


class ConsoleLogging:

    config = None
    configConfig = None
    configLogging = None
    status = True

    def __init__(self, master):
        self.master = master
        self.config = master.config
        try:
            self.configConfig = master.config["config"]
        except KeyError:
            self.configConfig = {}
        try:
            self.configLogging = master.config["logging"]["Console"]
        except KeyError:
            self.configLogging = {}
        self.status = self.configLogging.get("enabled", True)

        # Unload if this module is disabled or misconfigured
        if not self.status:
            self.master.releaseModule("lib.Devissage.Logging", "ConsoleLogging")
            return None

        # Initialize the mute config tree if it is not already
        if not self.configLogging.get("mute", None):
            self.configLogging["mute"] = {}

    def debugLog(self, logdata):
        if logdata["debugLevel"] >= logdata["minLevel"]:
            print(
                colored(logdata["logTime"] + " ", "yellow")
                + colored(logdata["function"], "green")
                + colored(" %d " % logdata["minLevel"], "cyan")
                + str(logdata["message"]),
                file=sys.stderr,
            )

    def checkResult(self, check):
        # Check if this status is muted
        if self.configLogging["mute"].get("Checks", 0):
            return None

        text = colored(check.status.upper(), STATUS_COLOURS.get(check.status, "white"))
        message = "%s %s (%d ms)" % (text, check.name, check.millis)
        if check.failed:
            message += ": expected %s, observed %s %s" % (
                colored(check.expected, "magenta"),
                colored(check.observed, "magenta"),
                check.detail,
            )
        self.master.debugLog(1, check.module, message)

    def frobeniusReport(self, report):
        # Check if this status is muted
        if self.configLogging["mute"].get("Frobenius", 0):
            return None

        digits = len(str(report.p))
        name = str(report.p) if digits < 20 else "<%d-digit prime>" % digits
        self.master.debugLog(
            1,
            "Frobenius",
            "p = %s: classes %s, a_p mod 3 in {%s} (%d ms)"
            % (
                name,
                colored(",".join(report.candidates), "magenta"),
                ",".join(report.asDict()["ap_mod3"]),
                report.millis,
            ),
        )
