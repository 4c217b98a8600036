# FrobeniusChecks module. Cross-checks of classified Frobenius elements
# against the tabulated Hecke eigenvalues.

from lib.Devissage.Background import run_tasks
from lib.Devissage.Group.F9 import format_f9
from lib.Devissage.VerificationReport import SkipCheck


class FrobeniusChecks:

    configVerify = None
    section = "frobenius"
    status = True

    def __init__(self, master):
        self.master = master
        try:
            self.configVerify = master.config["verify"]["FrobeniusChecks"]
        except KeyError:
            self.configVerify = {}
        self.status = self.configVerify.get("enabled", True)

        # Unload if this module is disabled
        if not self.status:
            self.master.releaseModule("lib.Devissage.Verify", "FrobeniusChecks")
            return None

    def _unwrap(self, result):
        if isinstance(result, Exception):
            raise result
        return result

    def smallPrimes(self, report):
        rows = self.master.getSmallPrimeTable()
        # Build the shared tables before the workers need them
        self.master.getClasses()
        self.master.getF28()
        results = run_tasks(self.master, "crosscheck", [{"row": row} for row in rows])
        for row, result in zip(rows, results):
            if row.ambiguous:
                report.check(
                    self.master,
                    "Frobenius",
                    "candidates p=%d" % row.p,
                    lambda result=result: (">= 2", len(self._unwrap(result).report.candidates),
                                           self._unwrap(result).report.ambiguous),
                )
            else:
                report.check(
                    self.master,
                    "Frobenius",
                    "crosscheck p=%d" % row.p,
                    lambda result=result: ("pass", "; ".join(self._unwrap(result).problems) or "pass"),
                )
            if not isinstance(result, Exception):
                self.master.logFrobeniusReport(result.report)

    def bigPrimes(self, report):
        if not self.master.getConfig("bigPrimes", True):
            report.check(self.master, "Frobenius", "big primes", self._skip)
            return
        rows = self.master.getBigPrimeTable()
        self.master.getClasses()
        self.master.getF28()
        results = run_tasks(self.master, "classify", [{"p": row.p} for row in rows])
        base = 10 ** 1000
        for row, result in zip(rows, results):
            name = "big prime 10^1000+%d" % (row.p - base) if row.p > base else "big prime %d" % row.p
            report.check(
                self.master,
                "Frobenius",
                name,
                lambda row=row, result=result: (
                    format_f9(row.ap.mod3),
                    ",".join(format_f9(t) for t in self._unwrap(result).apMod3),
                    self._unwrap(result).contains(row.ap.mod3),
                ),
            )
            if not isinstance(result, Exception):
                self.master.logFrobeniusReport(result)

    def _skip(self):
        raise SkipCheck("disabled by config.bigPrimes")

    def runChecks(self, report):
        self.smallPrimes(report)
        self.bigPrimes(report)
