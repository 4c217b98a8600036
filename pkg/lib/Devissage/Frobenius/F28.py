# Arithmetic sanity checks on the printed degree-28 polynomial: real
# roots, discriminant shape, irreducibility and a Chebotarev-style sweep of
# factorization patterns against the class table.

from dataclasses import dataclass, field
import math

from lib.Devissage.Algebra.Ddf import ddf_cycle_type, format_cycle_type, irreducibility_witness
from lib.Devissage.Algebra.NumberTheory import is_square, next_prime, strip_prime
from lib.Devissage.Algebra.Resultant import discriminant
from lib.Devissage.Algebra.Sturm import sturm_real_root_count
from lib.Devissage.Algebra.UniPoly import clear_denominators
from lib.Devissage.Errors import InconsistentDataError, RamifiedPrimeError

EXPECTED_REAL_ROOTS = 4
# Exponents of 2 and 3 in the discriminant of the field cut out by f28
FIELD_TWO_EXPONENT = 76
FIELD_THREE_EXPONENT = 48


@dataclass
class F28Report:
    degree: int
    realRoots: int
    discSign: int = 0
    twoExponent: int = 0
    threeExponent: int = 0
    squareRoot: int = None
    witnessPrimes: tuple = None
    sweptPrimes: list = field(default_factory=list)
    skippedPrimes: list = field(default_factory=list)
    observedCycleTypes: dict = field(default_factory=dict)
    unexplained: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)

    @property
    def signature(self):
        return (self.realRoots, (self.degree - self.realRoots) // 2)

    @property
    def ok(self):
        return not self.problems

    def summary(self):
        return {
            "real_roots": self.realRoots,
            "signature": "(%d,%d)" % self.signature,
            "disc": "%s2^%d 3^%d s^2" % ("-" if self.discSign < 0 else "", self.twoExponent, self.threeExponent),
            "witness": ",".join(str(q) for q in self.witnessPrimes or ()),
            "swept": len(self.sweptPrimes),
            "cycle_types": len(self.observedCycleTypes),
        }


def _discriminant_shape(f, report):
    _, g = clear_denominators(f)
    disc = discriminant(g)
    report.discSign = 1 if disc > 0 else -1
    report.twoExponent, rest = strip_prime(abs(disc), 2)
    report.threeExponent, rest = strip_prime(rest, 3)
    if is_square(rest):
        report.squareRoot = math.isqrt(rest)
    else:
        report.problems.append("discriminant is not +-2^a 3^b times a square")
    if report.discSign != (-1) ** report.signature[1]:
        report.problems.append("discriminant sign disagrees with the signature")
    a, b = report.twoExponent, report.threeExponent
    if a < FIELD_TWO_EXPONENT or (a - FIELD_TWO_EXPONENT) % 2:
        report.problems.append("2-adic exponent %d incompatible with the field discriminant" % a)
    if b < FIELD_THREE_EXPONENT or (b - FIELD_THREE_EXPONENT) % 2:
        report.problems.append("3-adic exponent %d incompatible with the field discriminant" % b)


def cycle_type_sweep(f, classes, count=100, start=5):
    # First `count` unramified primes q >= start and their cycle types
    allowed = {c.isotropicType for c in classes}
    observed, unexplained, swept, skipped = {}, {}, [], []
    q = next_prime(start - 1)
    while len(swept) < count:
        try:
            cycleType = ddf_cycle_type(f, q)
        except RamifiedPrimeError:
            skipped.append(q)
        else:
            swept.append(q)
            observed[cycleType] = observed.get(cycleType, 0) + 1
            if cycleType not in allowed:
                unexplained.setdefault(cycleType, []).append(q)
        q = next_prime(q)
    return swept, skipped, observed, unexplained


def verify_f28(f, classes, sweepPrimes=100, bound=500, strict=True):
    report = F28Report(degree=f.degree, realRoots=sturm_real_root_count(f))
    if report.realRoots != EXPECTED_REAL_ROOTS:
        report.problems.append("expected %d real roots, found %d" % (EXPECTED_REAL_ROOTS, report.realRoots))

    _discriminant_shape(f, report)

    report.witnessPrimes = irreducibility_witness(f, bound)
    if report.witnessPrimes is None:
        report.problems.append("no irreducibility witness below %d" % bound)

    swept, skipped, observed, unexplained = cycle_type_sweep(f, classes, sweepPrimes)
    report.sweptPrimes, report.skippedPrimes = swept, skipped
    report.observedCycleTypes, report.unexplained = observed, unexplained
    for cycleType, primes in sorted(unexplained.items()):
        report.problems.append(
            "cycle type %s (q = %s) is not a class cycle type"
            % (format_cycle_type(cycleType), ",".join(str(q) for q in primes))
        )

    if strict and report.problems:
        raise InconsistentDataError("f28: " + "; ".join(report.problems))
    return report
