# F28Checks module. Field data of the printed degree-28 polynomial.

from lib.Devissage.Algebra.Ddf import format_cycle_type
from lib.Devissage.Frobenius.F28 import verify_f28


class F28Checks:

    configVerify = None
    section = "f28"
    status = True

    def __init__(self, master):
        self.master = master
        try:
            self.configVerify = master.config["verify"]["F28Checks"]
        except KeyError:
            self.configVerify = {}
        self.status = self.configVerify.get("enabled", True)

        # Unload if this module is disabled
        if not self.status:
            self.master.releaseModule("lib.Devissage.Verify", "F28Checks")
            return None

    def report(self):
        return self.master.getTable(
            "f28Report",
            lambda: verify_f28(
                self.master.getF28(),
                self.master.getClasses(),
                sweepPrimes=self.master.getConfig("f28SweepPrimes", 100),
                bound=self.master.getConfig("irreducibilityBound", 500),
                strict=False,
            ),
        )

    def discShape(self):
        r = self.report()
        observed = "%s2^%d 3^%d s^2" % ("-" if r.discSign < 0 else "", r.twoExponent, r.threeExponent)
        return ("+-2^a 3^b s^2", observed, r.squareRoot is not None)

    def sweep(self):
        r = self.report()
        unexplained = sorted(format_cycle_type(c) for c in r.unexplained)
        self.master.debugLog(
            11,
            "F28Check",
            "%d cycle types over %d primes, %d ramified primes skipped"
            % (len(r.observedCycleTypes), len(r.sweptPrimes), len(r.skippedPrimes)),
        )
        return ([], unexplained)

    def runChecks(self, report):
        m = self.master
        report.check(m, "F28Check", "f28 degree", lambda: (28, m.getF28().degree))
        report.check(m, "F28Check", "f28 real roots", lambda: (4, self.report().realRoots))
        report.check(m, "F28Check", "f28 signature", lambda: ((4, 12), self.report().signature))
        report.check(m, "F28Check", "f28 discriminant shape", self.discShape)
        report.check(
            m,
            "F28Check",
            "f28 field discriminant exponents",
            lambda: ([], [p for p in self.report().problems if "exponent" in p or "sign" in p]),
        )
        report.check(
            m,
            "F28Check",
            "f28 irreducible",
            lambda: ("witness", self.report().witnessPrimes, self.report().witnessPrimes is not None),
        )
        report.check(m, "F28Check", "f28 cycle types in class table", self.sweep)
