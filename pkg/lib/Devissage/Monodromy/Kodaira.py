# Kodaira fibre types from the valuations of c4, c6 and the discriminant,
# in residue characteristic zero, and the monodromy attached to each type.

from dataclasses import dataclass, field
import math

from lib.Devissage.Errors import BadInputError, InconsistentDataError, UnsupportedError
from lib.Devissage.Monodromy.Place import place_valuation

# Valuation of an identically vanishing invariant
INFINITE_VALUATION = math.inf

# Weights of (c4, c6, discriminant) under a change of minimal model
WEIGHTS = (4, 6, 12)


@dataclass(frozen=True, order=True)
class KodairaType:
    family: str
    n: int = 0

    def __str__(self):
        if self.family == "I":
            return "I%d" % self.n
        if self.family == "I*":
            return "I%d*" % self.n
        return self.family

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("II", "III", "IV", "IV*", "III*", "II*"):
            return cls(text)
        star = text.endswith("*")
        body = text[:-1] if star else text
        if body.startswith("I") and body[1:].isdigit():
            return cls("I*" if star else "I", int(body[1:]))
        raise BadInputError("unknown Kodaira type %r" % text)

    @property
    def expectedDiscriminantValuation(self):
        if self.family == "I":
            return self.n
        if self.family == "I*":
            return self.n + 6
        return {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}[self.family]


I0 = KodairaType("I", 0)


def _valuation_or_infinite(poly, place):
    if poly.isZero():
        return INFINITE_VALUATION
    return place_valuation(poly, place)


def raw_valuations(E, place):
    return tuple(_valuation_or_infinite(f, place) for f in (E.c4, E.c6, E.discriminant))


def minimal_triple(vc4, vc6, vD):
    triple = (vc4, vc6, vD)
    if vD == INFINITE_VALUATION:
        raise BadInputError("the discriminant has no finite valuation")
    # A rescaling by u^k moves the triple by k*(4, 6, 12); first clear
    # negative entries, then remove the largest common multiple.
    negative = [math.ceil(-v / w) for v, w in zip(triple, WEIGHTS) if v < 0]
    if negative:
        k = max(negative)
        triple = tuple(v + k * w for v, w in zip(triple, WEIGHTS))
    k = min(int(v) // w for v, w in zip(triple, WEIGHTS) if v != INFINITE_VALUATION)
    if k > 0:
        triple = tuple(v - k * w for v, w in zip(triple, WEIGHTS))
    return tuple(v if v == INFINITE_VALUATION else int(v) for v in triple)


def kodaira_classify(vc4, vc6, vD):
    if vD == 0:
        return I0
    if vc4 == 0:
        return KodairaType("I", vD)
    if vc4 >= 1 and vc6 == 1 and vD == 2:
        return KodairaType("II")
    if vc4 == 1 and vc6 >= 2 and vD == 3:
        return KodairaType("III")
    if vc4 >= 2 and vc6 == 2 and vD == 4:
        return KodairaType("IV")
    if vc4 >= 2 and vc6 >= 3 and vD == 6:
        return KodairaType("I*", 0)
    if vc4 == 2 and vc6 == 3 and vD > 6:
        return KodairaType("I*", vD - 6)
    if vc4 >= 3 and vc6 == 4 and vD == 8:
        return KodairaType("IV*")
    if vc4 == 3 and vc6 >= 5 and vD == 9:
        return KodairaType("III*")
    if vc4 >= 4 and vc6 == 5 and vD == 10:
        return KodairaType("II*")
    raise InconsistentDataError(
        "non-minimal or inconsistent invariants (%s, %s, %s)" % (vc4, vc6, vD)
    )


MONODROMY = {
    "II": ((1, 1), (-1, 0)),
    "III": ((0, 1), (-1, 0)),
    "IV": ((0, 1), (-1, -1)),
    "IV*": ((-1, -1), (1, 0)),
    "III*": ((0, -1), (1, 0)),
    "II*": ((0, -1), (1, 1)),
}


def monodromy_of(t):
    if t.family == "I":
        return ((1, t.n), (0, 1))
    if t.family == "I*":
        return ((-1, -t.n), (0, -1))
    try:
        return MONODROMY[t.family]
    except KeyError:
        raise UnsupportedError("no monodromy known for fibre type %s" % t)


def determinant(T):
    return T[0][0] * T[1][1] - T[0][1] * T[1][0]


def format_matrix(T):
    return "[[%d,%d],[%d,%d]]" % (T[0][0], T[0][1], T[1][0], T[1][1])


@dataclass
class KodairaFiberReport:
    place: object
    rawValuations: tuple
    valuations: tuple
    kodairaType: KodairaType
    monodromy: tuple
    orbits: int = None
    alternativeOrbits: int = None
    notes: list = field(default_factory=list)

    def asDict(self):
        return {
            "place": self.place.label(),
            "valuations": list(self.valuations),
            "type": str(self.kodairaType),
            "monodromy": format_matrix(self.monodromy),
            "orbits": self.orbits,
            "alternativeOrbits": self.alternativeOrbits,
            "notes": list(self.notes),
        }


def kodaira_fiber_report(E, place, ell=None):
    from lib.Devissage.Monodromy.Genus import orbit_count

    raw = raw_valuations(E, place)
    valuations = minimal_triple(*raw)
    t = kodaira_classify(*valuations)
    if valuations[2] != t.expectedDiscriminantValuation:
        raise InconsistentDataError("discriminant valuation %d does not fit type %s" % (valuations[2], t))
    T = monodromy_of(t)
    report = KodairaFiberReport(place, raw, valuations, t, T)
    if ell is not None:
        report.orbits = orbit_count(T, ell)
        if t.family == "I*" and t.n > 0:
            # Inline Burnside shortcut for I_n* fibres, kept for comparison
            report.alternativeOrbits = 2 * ell - 2
            if report.alternativeOrbits != report.orbits:
                report.notes.append(
                    "orbit count %d by enumeration, %d by the 2l-2 shortcut"
                    % (report.orbits, report.alternativeOrbits)
                )
    return report


def kodaira_table(E, ell=None):
    from lib.Devissage.Fibration.BadLocus import bad_locus

    return [kodaira_fiber_report(E, place, ell) for place in bad_locus(E)]
