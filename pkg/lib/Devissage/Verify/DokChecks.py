# DokChecks module. Round trip of the resolvent engine on small fields
# where the Frobenius class can be read off the factorization directly.

from lib.Devissage.Algebra.Domains import QQ
from lib.Devissage.Algebra.NumberTheory import primes_between
from lib.Devissage.Algebra.UniPoly import UniPoly
from lib.Devissage.Errors import RamifiedPrimeError, UnsuitableParameterError
from lib.Devissage.Frobenius.Dokchitser import (
    DokContext,
    ResolventSet,
    build_resolvents_auto,
    factorization_pattern_oracle,
    match_resolvent,
)

TOY_F = UniPoly([-2, 0, 0, 1], QQ)
TOY_H = UniPoly([0, 0, 1], QQ)
# A transposition and a 3-cycle on the three roots
S3_GENERATORS = [(1, 0, 2), (1, 2, 0)]
GAUSS_F = UniPoly([1, 0, 1], QQ)
C2_GENERATORS = [(1, 0)]


def oracle_mismatches(rs, bound=500, warn=None):
    ctx = DokContext(rs.f, rs.h, rs.precision)
    mismatches, compared = [], 0
    for p in primes_between(2, bound):
        if p in rs.collisionPrimes:
            continue
        try:
            matched = match_resolvent(rs, ctx, p, warn)
        except RamifiedPrimeError:
            continue
        compared += 1
        if matched != factorization_pattern_oracle(rs, p):
            mismatches.append(p)
    return compared, mismatches


class DokChecks:

    configVerify = None
    section = "dok"
    status = True

    def __init__(self, master):
        self.master = master
        try:
            self.configVerify = master.config["verify"]["DokChecks"]
        except KeyError:
            self.configVerify = {}
        self.status = self.configVerify.get("enabled", True)

        # Unload if this module is disabled
        if not self.status:
            self.master.releaseModule("lib.Devissage.Verify", "DokChecks")
            return None

    def built(self):
        return self.master.getTable(
            "toyResolvents",
            lambda: build_resolvents_auto(
                TOY_F, S3_GENERATORS, TOY_H, self.master.getConfig("resolventPrecision", 64)
            ),
        )

    def matchesFixture(self):
        fixture = self.master.getResolventToy()
        return (
            {k: str(v) for k, v in fixture.resolvents.items()},
            {k: str(v) for k, v in self.built().resolvents.items()},
        )

    def roundTrip(self):
        rs = self.built()
        again = ResolventSet.parse(rs.serialize())
        same = (
            again.resolvents == rs.resolvents
            and again.h == rs.h
            and again.cycleTypes == rs.cycleTypes
            and again.collisionPrimes == rs.collisionPrimes
        )
        return ("identical", "identical" if same else "changed", same)

    def oracle(self):
        compared, mismatches = oracle_mismatches(
            self.built(), warn=lambda msg: self.master.debugLog(1, "DokCheck", msg)
        )
        self.master.debugLog(11, "DokCheck", "compared %d primes with the factorization oracle" % compared)
        return ([], mismatches)

    def unsuitable(self):
        try:
            build_resolvents_auto(TOY_F, S3_GENERATORS, UniPoly([0, 1], QQ))
        except UnsuitableParameterError:
            return ("rejected", "rejected")
        return ("rejected", "accepted")

    def gaussian(self):
        rs = build_resolvents_auto(GAUSS_F, C2_GENERATORS, UniPoly([0, 1], QQ))
        compared, mismatches = oracle_mismatches(rs)
        return (
            {"1A": "x + 2", "2A": "x - 2", "mismatches": []},
            {"1A": str(rs["1A"]), "2A": str(rs["2A"]), "mismatches": mismatches},
        )

    def runChecks(self, report):
        m = self.master
        report.check(m, "DokCheck", "toy resolvents match fixture", self.matchesFixture)
        report.check(m, "DokCheck", "toy resolvent round trip", self.roundTrip)
        report.check(m, "DokCheck", "toy collision primes", lambda: ((2, 3), self.built().collisionPrimes))
        report.check(m, "DokCheck", "resolvent matches factorization, p < 500", self.oracle)
        report.check(m, "DokCheck", "h = x rejected for x^3 - 2", self.unsuitable)
        report.check(m, "DokCheck", "x^2 + 1 resolvents", self.gaussian)
