# Identification of Frobenius classes in SU3(F9) from the factorization of
# the degree-28 polynomial mod p, and cross-checks against tabulated a_p.

from dataclasses import dataclass, field
import time

from lib.Devissage.Algebra.Ddf import ddf_cycle_type, format_cycle_type
from lib.Devissage.Algebra.NumberTheory import is_prime, kronecker_symbol
from lib.Devissage.Errors import (
    BadInputError,
    CompositeModulusError,
    InconsistentDataError,
    RamifiedPrimeError,
)
from lib.Devissage.Frobenius.Hecke import HeckeEigenvalue, chi_p
from lib.Devissage.Group.F9 import CONJ, MUL, format_f9
from lib.Devissage.Group.Classes import class_of
from lib.Devissage.Group.SU3 import determinant, is_unitary


@dataclass
class FrobeniusReport:
    p: int
    sign: int
    cycleType: tuple
    candidates: tuple
    traces: tuple
    apMod3: tuple
    millis: int = 0

    @property
    def ambiguous(self):
        return len(self.candidates) > 1

    def contains(self, code):
        return code in self.apMod3

    def asDict(self):
        return {
            "p": str(self.p),
            "sign": "%+d" % self.sign,
            "cycle_type": format_cycle_type(self.cycleType),
            "classes": list(self.candidates),
            "traces": [format_f9(t) for t in self.traces],
            "ap_mod3": [format_f9(t) for t in self.apMod3],
            "millis": self.millis,
        }


@dataclass
class TableRow:
    p: int
    ap: HeckeEigenvalue
    sign: int = None
    matrix: tuple = None

    @property
    def ambiguous(self):
        return self.matrix is None


@dataclass
class CrosscheckResult:
    p: int
    report: FrobeniusReport
    signAgrees: bool = True
    traceMatch: str = None
    charPolyAgrees: bool = False
    printedClass: str = None
    printedInCandidates: bool = True
    problems: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.problems

    def __bool__(self):
        return self.passed


def _check_prime(p):
    if p < 2:
        raise BadInputError("p must be a prime, got %d" % p)
    if p in (2, 3):
        raise RamifiedPrimeError("ramified prime %d" % p)
    if not is_prime(p):
        raise CompositeModulusError("%d is not prime" % p)


def frobenius_sign(p):
    return kronecker_symbol(-3, p)


def classify_frobenius(p, f28, classes):
    started = time.monotonic()
    _check_prime(p)
    cycleType = ddf_cycle_type(f28, p)
    candidates = sorted(
        (c for c in classes if c.isotropicType == cycleType), key=lambda c: c.label
    )
    if not candidates:
        raise InconsistentDataError(
            "cycle type %s mod %d matches no conjugacy class" % (format_cycle_type(cycleType), p)
        )
    sign = frobenius_sign(p)
    traces = sorted({c.signedTrace(sign) for c in candidates})
    apMod3 = sorted(set(traces) | {CONJ[t] for t in traces})
    return FrobeniusReport(
        p=p,
        sign=sign,
        cycleType=cycleType,
        candidates=tuple(c.label for c in candidates),
        traces=tuple(traces),
        apMod3=tuple(apMod3),
        millis=int((time.monotonic() - started) * 1000),
    )


def _signed_matrix(sign, M):
    s = sign % 3
    return tuple(MUL[s][x] for x in M)


def crosscheck_table(row, f28, classes):
    p = row.p
    report = classify_frobenius(p, f28, classes)
    result = CrosscheckResult(p=p, report=report)

    if row.sign is not None and row.sign != report.sign:
        result.signAgrees = False
        result.problems.append("printed sign %+d differs from (-3/%d) = %+d" % (row.sign, p, report.sign))

    a = row.ap.mod3
    byLabel = {c.label: c for c in classes}
    conventions = (("a", a), ("conj(a)", CONJ[a]))
    for name, value in conventions:
        chi = chi_p(value, p).chiCodes()
        for label in report.candidates:
            c = byLabel[label]
            if c.signedTrace(report.sign) != value:
                continue
            result.traceMatch = result.traceMatch or name
            if c.signedCharPoly(report.sign) == chi:
                result.traceMatch = name
                result.charPolyAgrees = True
                break
        if result.charPolyAgrees:
            break
    if result.traceMatch is None:
        result.problems.append("no candidate trace equals a_p mod 3 = %s" % format_f9(a))
    elif not result.charPolyAgrees:
        result.problems.append("candidate characteristic polynomials differ from chi_%d" % p)

    if not row.ambiguous:
        M = row.matrix
        if not is_unitary(M) or determinant(M) != 1:
            raise InconsistentDataError(
                "data-transcription error: printed matrix for p = %d is not in SU3(F9)" % p
            )
        result.printedClass = class_of(classes, M).label
        if result.printedClass not in report.candidates:
            result.printedInCandidates = False
            result.problems.append(
                "printed class %s is not among %s" % (result.printedClass, ",".join(report.candidates))
            )
    return result


def table_row(rows, p):
    for row in rows:
        if row.p == p:
            return row
    raise BadInputError("no table row for p = %d" % p)
