# GroupChecks module. Order, center, Hermitian counts, orbit degrees and
# the conjugacy classes of SU3(F9).

from lib.Devissage.Group.Classes import class_invariant_violations, fingerprint_groups
from lib.Devissage.Group.Hermitian import UNIT, ZERO, hermitian_count, hermitian_count_bruteforce
from lib.Devissage.Group.SU3 import GU3_ORDER, SU3_ORDER, ScalarSubgroup, orbit_degrees

ORBIT_DEGREES = {
    ScalarSubgroup.ALL: [28, 63],
    ScalarSubgroup.PMI: [56, 63, 63],
    ScalarSubgroup.PM1: [112, 126, 126],
    ScalarSubgroup.TRIVIAL: [224, 252, 252],
}

CLASS_SIZES = [1, 56, 63, 63, 63, 378, 504, 504, 504, 672, 756, 756, 864, 864]


class GroupChecks:

    configVerify = None
    section = "group"
    status = True

    def __init__(self, master):
        self.master = master
        try:
            self.configVerify = master.config["verify"]["GroupChecks"]
        except KeyError:
            self.configVerify = {}
        self.status = self.configVerify.get("enabled", True)

        # Unload if this module is disabled
        if not self.status:
            self.master.releaseModule("lib.Devissage.Verify", "GroupChecks")
            return None

    def hermitian(self, which, expected):
        closed = hermitian_count(3, 3, which)
        brute = hermitian_count_bruteforce(3, 3, which)
        return (expected, closed, closed == brute == expected)

    def runChecks(self, report):
        table = lambda: self.master.getGroupTable()
        classes = lambda: self.master.getClasses()
        m = self.master
        report.check(m, "Group", "order of SU3(F9)", lambda: (SU3_ORDER, len(table())))
        report.check(m, "Group", "order of GU3(F9)", lambda: (GU3_ORDER, table().gu3Count))
        report.check(m, "Group", "trivial center", lambda: (1, len(table().center())))
        report.check(m, "Group", "hermitian A3", lambda: self.hermitian(UNIT, 252))
        report.check(m, "Group", "hermitian B3", lambda: self.hermitian(ZERO, 225))
        report.check(
            m,
            "Group",
            "line counts",
            lambda: ((28, 63), (len(table().isotropicLines), len(table().nonisotropicLines))),
        )
        for K in ScalarSubgroup.chain():
            report.check(
                m,
                "Group",
                "orbit degrees mod %s" % K,
                lambda K=K: (ORBIT_DEGREES[K], orbit_degrees(table(), K)),
            )
        report.check(
            m, "Group", "class sizes", lambda: (CLASS_SIZES, sorted(c.size for c in classes()))
        )
        report.check(
            m, "Group", "class invariants", lambda: ([], class_invariant_violations(table(), classes()))
        )
        report.check(
            m, "Group", "isotropic fingerprints", lambda: (8, len(fingerprint_groups(classes())))
        )
