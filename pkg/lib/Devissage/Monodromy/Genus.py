# Orbit counts of local monodromy on the nonzero l-torsion and the genus of
# the l-torsion cover by Riemann-Hurwitz.

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from lib.Devissage.Algebra.NumberTheory import is_prime
from lib.Devissage.Errors import BadInputError, InconsistentDataError
from lib.Devissage.Monodromy.Kodaira import determinant, kodaira_table, monodromy_of


def _mat_mul(A, B, ell):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(2)) % ell for j in range(2))
        for i in range(2)
    )


def _reduce(T, ell):
    return tuple(tuple(c % ell for c in row) for row in T)


IDENTITY = ((1, 0), (0, 1))


def cyclic_powers(T, ell):
    # All distinct powers of T mod ell, starting from the identity
    T = _reduce(T, ell)
    powers = [IDENTITY]
    current = T
    while current != IDENTITY:
        powers.append(current)
        current = _mat_mul(current, T, ell)
    return powers


def _kernel_dimension(M, ell):
    # dim ker(M - I) over F_ell for a 2x2 matrix
    A = ((M[0][0] - 1) % ell, M[0][1] % ell), (M[1][0] % ell, (M[1][1] - 1) % ell)
    if not any(any(row) for row in A):
        return 2
    if (A[0][0] * A[1][1] - A[0][1] * A[1][0]) % ell == 0:
        return 1
    return 0


def burnside_orbit_count(T, ell):
    powers = cyclic_powers(T, ell)
    fixed = sum(ell ** _kernel_dimension(M, ell) - 1 for M in powers)
    if fixed % len(powers):
        raise InconsistentDataError("Burnside average %d/%d is not integral" % (fixed, len(powers)))
    return fixed // len(powers)


def enumerated_orbit_count(T, ell):
    T = _reduce(T, ell)
    seen = set()
    orbits = 0
    for a in range(ell):
        for b in range(ell):
            if (a, b) == (0, 0) or (a, b) in seen:
                continue
            orbits += 1
            queue = deque([(a, b)])
            seen.add((a, b))
            while queue:
                u, v = queue.popleft()
                image = ((T[0][0] * u + T[0][1] * v) % ell, (T[1][0] * u + T[1][1] * v) % ell)
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
    return orbits


def orbit_count(T, ell):
    if determinant(T) != 1:
        raise BadInputError("monodromy matrix must have determinant 1")
    if ell < 3 or not is_prime(ell):
        raise BadInputError("orbit counts need an odd prime, got %d" % ell)
    burnside = burnside_orbit_count(T, ell)
    enumerated = enumerated_orbit_count(T, ell)
    if burnside != enumerated:
        raise InconsistentDataError(
            "Burnside count %d disagrees with orbit enumeration %d" % (burnside, enumerated)
        )
    return enumerated


@dataclass
class GenusReport:
    ell: int
    degree: int
    contributions: list = field(default_factory=list)
    genus: int = 0
    closedForm: Fraction = None

    @property
    def matchesClosedForm(self):
        return self.closedForm is not None and self.closedForm == self.genus


def closed_form_genus(ell):
    # Genus of the l-torsion cover of the twisted fibration
    return Fraction(3, 2) * ell * ell - 3 * ell + Fraction(5, 2)


def cover_genus(fibres, ell):
    # fibres: iterable of (Place, KodairaType) covering every bad place
    if ell < 3 or not is_prime(ell):
        raise BadInputError("cover genus needs an odd prime, got %d" % ell)
    d = ell * ell - 1
    report = GenusReport(ell, d, closedForm=closed_form_genus(ell))
    total = 0
    for place, t in fibres:
        orbits = orbit_count(monodromy_of(t), ell)
        contribution = place.residueDegree * (d - orbits)
        report.contributions.append((place, t, orbits, contribution))
        total += contribution
    genus = Fraction(2 - 2 * d + total, 2)
    if genus.denominator != 1 or genus < 0:
        raise InconsistentDataError("inconsistent fibre data: genus %s" % genus)
    report.genus = int(genus)
    return report


def fibration_genus(E, ell):
    return cover_genus([(r.place, r.kodairaType) for r in kodaira_table(E)], ell)
