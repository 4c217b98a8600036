# Conjugacy classes of SU3(F9), their invariants, and the text form in
# which the class table is exported for classification runs.

from collections import deque
from dataclasses import dataclass, field
import string

from lib.Devissage.Algebra.Ddf import format_cycle_type
from lib.Devissage.Errors import BadInputError, FixtureError, InconsistentDataError
from lib.Devissage.Group.F9 import MUL, ZERO, format_f9, parse_f9
from lib.Devissage.Group.SU3 import (
    IDENTITY,
    char_poly,
    determinant,
    element_order,
    is_unitary,
    line_action_cycle_type,
    trace,
)


@dataclass
class ConjClass:
    label: str
    size: int
    order: int
    trace: int
    charPoly: tuple
    isotropicType: tuple
    nonisotropicType: tuple
    representative: tuple
    elements: frozenset = field(default=None, repr=False, compare=False)

    def __contains__(self, M):
        return self.elements is not None and M in self.elements

    def signedTrace(self, sign):
        return MUL[sign % 3][self.trace]

    def signedCharPoly(self, sign):
        # det(x - sM) = s^3 det(s x - M) for s = +-1
        if sign == 1:
            return self.charPoly
        c0, c1, c2, c3 = self.charPoly
        return (MUL[2][c0], c1, MUL[2][c2], c3)


def _representative(members):
    # Prefer matrices with many zero entries, then the smallest encoding
    return min(members, key=lambda M: (-sum(1 for x in M if x == ZERO), M))


def conjugacy_classes(table):
    unseen = set(table.elements)
    raw = []
    while unseen:
        start = min(unseen)
        members = {start}
        queue = deque([start])
        while queue:
            M = queue.popleft()
            for g in table.generators:
                N = table.conjugate(g, M)
                if N not in members:
                    members.add(N)
                    queue.append(N)
        unseen -= members
        rep = _representative(members)
        raw.append((element_order(rep), len(members), rep, frozenset(members)))

    if sum(size for _, size, _, _ in raw) != len(table):
        raise InconsistentDataError("class sizes do not add up to the group order")

    raw.sort(key=lambda r: (r[0], r[1], r[2]))
    classes = []
    letters = {}
    for order, size, rep, members in raw:
        letter = string.ascii_uppercase[letters.get(order, 0)]
        letters[order] = letters.get(order, 0) + 1
        classes.append(
            ConjClass(
                label="%d%s" % (order, letter),
                size=size,
                order=order,
                trace=trace(rep),
                charPoly=char_poly(rep),
                isotropicType=line_action_cycle_type(table, rep, "isotropic"),
                nonisotropicType=line_action_cycle_type(table, rep, "nonisotropic"),
                representative=rep,
                elements=members,
            )
        )
    return classes


def class_invariant_violations(table, classes):
    # Every listed invariant must be constant on its class
    problems = []
    for c in classes:
        for M in c.elements:
            observed = (
                element_order(M),
                trace(M),
                char_poly(M),
                line_action_cycle_type(table, M, "isotropic"),
                line_action_cycle_type(table, M, "nonisotropic"),
            )
            expected = (c.order, c.trace, c.charPoly, c.isotropicType, c.nonisotropicType)
            if observed != expected:
                problems.append((c.label, M))
                break
        if len(table) % c.size:
            problems.append((c.label, "size does not divide the group order"))
    return problems


def class_of(classes, M):
    for c in classes:
        if M in c:
            return c
    raise InconsistentDataError("matrix is not in any conjugacy class")


def verify_class_reps(reps, classes):
    # reps: iterable of (name, matrix); returns {name: class label}
    found = {}
    for name, M in reps:
        if not is_unitary(M) or determinant(M) != 1:
            raise InconsistentDataError(
                "data-transcription error: representative %s is not in SU3(F9)" % name
            )
        found[name] = class_of(classes, M).label
    return found


def fingerprint_groups(classes):
    # Isotropic cycle type -> labels of the classes sharing it
    groups = {}
    for c in classes:
        groups.setdefault(c.isotropicType, []).append(c.label)
    return groups


def _format_matrix(M):
    return " ".join(format_f9(x) for x in M)


def _cycle_field(cycleType):
    return format_cycle_type(cycleType).replace(" ", ",")


def _parse_cycle_field(text):
    parts = []
    for token in text.split(","):
        d, _, m = token.partition("^")
        parts.append((int(d), int(m) if m else 1))
    return tuple(sorted(parts))


def export_classes(classes):
    lines = [
        "# SU3(F9) conjugacy classes",
        "# label | size | order | trace | charpoly c0 c1 c2 c3 | isotropic | nonisotropic | representative",
    ]
    for c in classes:
        lines.append(
            " | ".join(
                [
                    c.label,
                    str(c.size),
                    str(c.order),
                    format_f9(c.trace),
                    " ".join(format_f9(x) for x in c.charPoly),
                    _cycle_field(c.isotropicType),
                    _cycle_field(c.nonisotropicType),
                    _format_matrix(c.representative),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def import_classes(text, path="<classes>"):
    classes = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 8:
            raise FixtureError(path, "line %d: expected 8 fields, found %d" % (number, len(fields)))
        try:
            rep = tuple(parse_f9(tok) for tok in fields[7].split())
            charPoly = tuple(parse_f9(tok) for tok in fields[4].split())
            c = ConjClass(
                label=fields[0],
                size=int(fields[1]),
                order=int(fields[2]),
                trace=parse_f9(fields[3]),
                charPoly=charPoly,
                isotropicType=_parse_cycle_field(fields[5]),
                nonisotropicType=_parse_cycle_field(fields[6]),
                representative=rep,
            )
        except (ValueError, BadInputError) as e:
            raise FixtureError(path, "line %d: %s" % (number, e))
        if len(rep) != 9 or len(charPoly) != 4:
            raise FixtureError(path, "line %d: malformed matrix or polynomial" % number)
        classes.append(c)
    if not classes:
        raise FixtureError(path, "no conjugacy classes found")
    return classes


def identity_class(classes):
    for c in classes:
        if c.representative == IDENTITY:
            return c
    raise InconsistentDataError("no identity class")
