# GenusChecks module. Genus of the l-torsion cover by Riemann-Hurwitz.

from lib.Devissage.Algebra.NumberTheory import primes_between
from lib.Devissage.Monodromy.Genus import cover_genus, orbit_count
from lib.Devissage.Monodromy.Kodaira import kodaira_table

EXPECTED_GENUS = {3: 7, 5: 25, 7: 55}


class GenusChecks:

    configVerify = None
    section = "genus"
    status = True

    def __init__(self, master):
        self.master = master
        try:
            self.configVerify = master.config["verify"]["GenusChecks"]
        except KeyError:
            self.configVerify = {}
        self.status = self.configVerify.get("enabled", True)

        # Unload if this module is disabled
        if not self.status:
            self.master.releaseModule("lib.Devissage.Verify", "GenusChecks")
            return None

    def fibres(self):
        table = self.master.getTable("kodaira", lambda: kodaira_table(self.master.getFibration()))
        return [(r.place, r.kodairaType) for r in table]

    def genus(self, ell):
        report = cover_genus(self.fibres(), ell)
        return (EXPECTED_GENUS[ell], report.genus, report.genus == EXPECTED_GENUS[ell] and report.matchesClosedForm)

    def burnside(self):
        # orbit_count raises when Burnside and enumeration disagree
        ells = primes_between(3, 32)
        for ell in ells:
            for r in self.master.getTable("kodaira", lambda: kodaira_table(self.master.getFibration())):
                orbit_count(r.monodromy, ell)
        return (len(ells), len(ells))

    def closedForm(self):
        ells = primes_between(3, 32)
        agreeing = [ell for ell in ells if cover_genus(self.fibres(), ell).matchesClosedForm]
        return (ells, agreeing)

    def runChecks(self, report):
        for ell in sorted(EXPECTED_GENUS):
            report.check(self.master, "Genus", "genus l=%d" % ell, lambda ell=ell: self.genus(ell))
        report.check(self.master, "Genus", "burnside = enumeration, l <= 31", self.burnside)
        report.check(self.master, "Genus", "closed form, l <= 31", self.closedForm)
