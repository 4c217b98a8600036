# FibrationChecks module. j-invariant, bad locus and fibrewise checks of
# the plane model against 3-torsion points.

import random

from lib.Devissage.Algebra.NumberTheory import primes_between
from lib.Devissage.Algebra.RationalFunction import RationalFunction
from lib.Devissage.Errors import DegenerateSpecializationError
from lib.Devissage.Fibration.BadLocus import bad_locus
from lib.Devissage.Fibration.FibrationCurve import LAMBDA, untwisted_fibration
from lib.Devissage.Fibration.PlaneModel import fiber_consistency_check

BAD_LOCUS = ["λ=-1", "λ=0", "λ=1", "λ^2 - 2*λ - 1=0", "∞"]


def expected_j():
    # 2^4 (l^4 + 14 l^2 + 1)^3 / (l^2 (l^2 - 1)^4)
    l2 = LAMBDA * LAMBDA
    return RationalFunction(((l2 * l2 + l2 * 14 + 1) ** 3) * 16, l2 * (l2 - 1) ** 4)


class FibrationChecks:

    configVerify = None
    section = "fibration"
    status = True

    def __init__(self, master):
        self.master = master
        try:
            self.configVerify = master.config["verify"]["FibrationChecks"]
        except KeyError:
            self.configVerify = {}
        self.status = self.configVerify.get("enabled", True)

        # Unload if this module is disabled
        if not self.status:
            self.master.releaseModule("lib.Devissage.Verify", "FibrationChecks")
            return None

    def jInvariant(self):
        E = self.master.getFibration()
        expected = expected_j()
        return (str(expected), str(E.j), E.j == expected and untwisted_fibration().j == expected)

    def badLocus(self):
        labels = sorted(place.label() for place in bad_locus(self.master.getFibration()))
        return (sorted(BAD_LOCUS), labels)

    def fibreConsistency(self):
        count = self.master.getConfig("fiberChecks", 20)
        rng = random.Random(self.master.getConfig("randomSeed", 0))
        primes = primes_between(5, 200)
        model = self.master.getPlaneModel(3)
        curve = self.master.getFibration()
        agreed, attempts = 0, 0
        while attempts < count:
            p = rng.choice(primes)
            lam0 = rng.randrange(p)
            try:
                ok = fiber_consistency_check(p, lam0, curve, model)
            except DegenerateSpecializationError:
                continue
            attempts += 1
            if ok:
                agreed += 1
            else:
                self.master.debugLog(1, "FibrCheck", "fibre check failed at p=%d, λ=%d" % (p, lam0))
        return (count, agreed)

    def runChecks(self, report):
        report.check(self.master, "FibrCheck", "j-invariant", self.jInvariant)
        report.check(self.master, "FibrCheck", "bad locus", self.badLocus)
        report.check(self.master, "FibrCheck", "fibre consistency", self.fibreConsistency)
