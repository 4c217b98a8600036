# PropertyChecks module. Randomized and exhaustive identities that tie the
# arithmetic layers together.

import random

from lib.Devissage.Algebra.Domains import ZZ
from lib.Devissage.Algebra.NumberTheory import kronecker_symbol, primes_between
from lib.Devissage.Algebra.Resultant import resultant, specialize, sylvester_resultant
from lib.Devissage.Algebra.UniPoly import PolyRing, UniPoly
from lib.Devissage.Errors import RamifiedPrimeError
from lib.Devissage.Frobenius.Dokchitser import (
    DokContext,
    dok_trace_invariant,
    dok_trace_invariant_matrix,
)
from lib.Devissage.Frobenius.Hecke import (
    TRIVIAL_MOD2,
    chi_p,
    chi_p_mod2,
    is_irreducible_f3,
    twist_sign,
    twisted_chi_prime,
)


def random_poly(rng, degree, domain=ZZ, bound=9, monic=False):
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    coeffs.append(1 if monic else rng.choice([c for c in range(-bound, bound + 1) if c]))
    return UniPoly(coeffs, domain)


class PropertyChecks:

    configVerify = None
    section = "properties"
    status = True
    trials = 25

    def __init__(self, master):
        self.master = master
        try:
            self.configVerify = master.config["verify"]["PropertyChecks"]
        except KeyError:
            self.configVerify = {}
        self.status = self.configVerify.get("enabled", True)

        # Unload if this module is disabled
        if not self.status:
            self.master.releaseModule("lib.Devissage.Verify", "PropertyChecks")
            return None
        self.trials = self.configVerify.get("trials", 25)

    def rng(self):
        return random.Random(self.master.getConfig("randomSeed", 0))

    def chiPrimeInF3(self):
        # chi_p raises InconsistentDataError when a norm coefficient leaves F3
        count = 0
        for re_part in range(9):
            for im_part in range(9):
                for p in (5, 7):
                    chi_p((re_part, im_part), p)
                    count += 1
        return (162, count)

    def mod2(self):
        rows = self.master.getSmallPrimeTable()
        bad = [row.p for row in rows if chi_p_mod2(row.ap, row.p) != TRIVIAL_MOD2]
        return ([], bad)

    def twisted11(self):
        row = next(r for r in self.master.getSmallPrimeTable() if r.p == 11)
        twisted = twisted_chi_prime(chi_p(row.ap, 11), twist_sign(11))
        observed = [c.coeffs[0] for c in twisted.coeffs]
        return ([1] * 7, observed, observed == [1] * 7 and is_irreducible_f3(twisted))

    def signColumn(self):
        rows = self.master.getSmallPrimeTable() + self.master.getBigPrimeTable()
        bad = [row.p for row in rows if not row.ambiguous and row.sign != kronecker_symbol(-3, row.p)]
        return ([], bad)

    def multiplicativity(self):
        rng = self.rng()
        bad = 0
        for _ in range(self.trials):
            f, g, h = (random_poly(rng, rng.randint(1, 5)) for _ in range(3))
            if resultant(f, g * h) != resultant(f, g) * resultant(f, h):
                bad += 1
            if resultant(f, g) != sylvester_resultant(f, g):
                bad += 1
        return (0, bad)

    def specialization(self):
        rng = self.rng()
        ring = PolyRing(ZZ, "λ")
        bad = 0
        for _ in range(self.trials):
            f = UniPoly([random_poly(rng, rng.randint(0, 2)) for _ in range(rng.randint(2, 4))], ring)
            g = UniPoly([random_poly(rng, rng.randint(0, 2)) for _ in range(rng.randint(2, 4))], ring)
            value = rng.randint(-5, 5)
            if f.lc()(value) == 0 or g.lc()(value) == 0:
                continue
            if resultant(f, g)(value) != resultant(specialize(f, value), specialize(g, value)):
                bad += 1
        return (0, bad)

    def traceOrder(self):
        rng = self.rng()
        primes = primes_between(5, 100)
        bad, compared = 0, 0
        while compared < self.trials:
            f = random_poly(rng, rng.randint(2, 6), monic=True)
            h = random_poly(rng, rng.randint(0, 4))
            ctx = DokContext(f, h)
            p = rng.choice(primes)
            try:
                if dok_trace_invariant(ctx, p) != dok_trace_invariant_matrix(ctx, p):
                    bad += 1
            except RamifiedPrimeError:
                continue
            compared += 1
        return (0, bad)

    def runChecks(self, report):
        m = self.master
        report.check(m, "Property", "chi' in F3[x]", self.chiPrimeInF3)
        report.check(m, "Property", "chi_p = (x-1)^3 mod 2", self.mod2)
        report.check(m, "Property", "chi'_11 twisted by (6/11)", self.twisted11)
        report.check(m, "Property", "printed signs are (-3/p)", self.signColumn)
        report.check(m, "Property", "resultant multiplicativity", self.multiplicativity)
        report.check(m, "Property", "resultant specialization", self.specialization)
        report.check(m, "Property", "trace invariant reduction order", self.traceOrder)
