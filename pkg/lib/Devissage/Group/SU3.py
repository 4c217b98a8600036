# The special unitary group SU3(F9) of the standard Hermitian form, its
# action on the 91 points of the projective plane over F9 and the orbit
# structure on vectors modulo scalars.
#
# Matrices are 9-tuples of F9 codes in row-major order, vectors 3-tuples.

from collections import deque
from enum import Enum
import itertools

from sympy.combinatorics import Permutation, PermutationGroup

from lib.Devissage.Errors import InconsistentDataError
from lib.Devissage.Group.F9 import ADD, CONJ, INV, MINUS_I, MINUS_ONE, MUL, NEG, NONZERO, ONE, I, ZERO

GU3_ORDER = 24192
SU3_ORDER = 6048
IDENTITY = (ONE, ZERO, ZERO, ZERO, ONE, ZERO, ZERO, ZERO, ONE)


def mat_mul(A, B):
    return tuple(
        ADD[ADD[MUL[A[3 * r]][B[c]]][MUL[A[3 * r + 1]][B[3 + c]]]][MUL[A[3 * r + 2]][B[6 + c]]]
        for r in range(3)
        for c in range(3)
    )


def mat_vec(M, v):
    return tuple(
        ADD[ADD[MUL[M[3 * r]][v[0]]][MUL[M[3 * r + 1]][v[1]]]][MUL[M[3 * r + 2]][v[2]]]
        for r in range(3)
    )


def conj_transpose(M):
    return tuple(CONJ[M[3 * c + r]] for r in range(3) for c in range(3))


def trace(M):
    return ADD[ADD[M[0]][M[4]]][M[8]]


def _minor(M, a, b, c, d):
    return ADD[MUL[M[a]][M[d]]][NEG[MUL[M[b]][M[c]]]]


def determinant(M):
    t0 = MUL[M[0]][_minor(M, 4, 5, 7, 8)]
    t1 = MUL[M[1]][_minor(M, 3, 5, 6, 8)]
    t2 = MUL[M[2]][_minor(M, 3, 4, 6, 7)]
    return ADD[ADD[t0][NEG[t1]]][t2]


def char_poly(M):
    # Coefficients (c0, c1, c2, c3) of det(x - M), constant first
    c2 = NEG[trace(M)]
    minors = ADD[ADD[_minor(M, 0, 1, 3, 4)][_minor(M, 0, 2, 6, 8)]][_minor(M, 4, 5, 7, 8)]
    return (NEG[determinant(M)], minors, c2, ONE)


def hermitian(u, v):
    return ADD[ADD[MUL[u[0]][CONJ[v[0]]]][MUL[u[1]][CONJ[v[1]]]]][MUL[u[2]][CONJ[v[2]]]]


def scale(mu, v):
    return tuple(MUL[mu][x] for x in v)


def _cross(u, v):
    return (
        ADD[MUL[u[1]][v[2]]][NEG[MUL[u[2]][v[1]]]],
        ADD[MUL[u[2]][v[0]]][NEG[MUL[u[0]][v[2]]]],
        ADD[MUL[u[0]][v[1]]][NEG[MUL[u[1]][v[0]]]],
    )


def from_columns(c1, c2, c3):
    return tuple(col[r] for r in range(3) for col in (c1, c2, c3))


def is_unitary(M):
    return mat_mul(conj_transpose(M), M) == IDENTITY


def normalize(v):
    # Canonical representative of the line through v: first nonzero entry 1
    for x in v:
        if x != ZERO:
            return scale(INV[x], v)
    raise InconsistentDataError("the zero vector spans no line")


def element_order(M):
    n, P = 1, M
    while P != IDENTITY:
        P = mat_mul(P, M)
        n += 1
    return n


class ScalarSubgroup(Enum):
    TRIVIAL = ("1", (ONE,))
    PM1 = ("pm1", (ONE, MINUS_ONE))
    PMI = ("pmi", (ONE, MINUS_ONE, I, MINUS_I))
    ALL = ("all", NONZERO)

    def __init__(self, token, scalars):
        self.token = token
        self.scalars = scalars

    @classmethod
    def parse(cls, token):
        for member in cls:
            if member.token == token:
                return member
        raise ValueError("unknown scalar subgroup %r" % token)

    @classmethod
    def chain(cls):
        # F9^* >= {+-1, +-i} >= {+-1} >= {1}
        return [cls.ALL, cls.PMI, cls.PM1, cls.TRIVIAL]

    def __le__(self, other):
        return set(self.scalars) <= set(other.scalars)

    def __str__(self):
        if self is ScalarSubgroup.TRIVIAL:
            return "{1}"
        if self is ScalarSubgroup.PM1:
            return "{±1}"
        if self is ScalarSubgroup.PMI:
            return "{±1,±i}"
        return "F9^*"


class GroupTable:

    def __init__(self, elements, gu3Count):
        self.elements = elements
        self.gu3Count = gu3Count
        self.index = {M: k for k, M in enumerate(elements)}
        self.generators = self._findGenerators()
        self.lines = sorted({normalize(v) for v in itertools.product(range(9), repeat=3) if any(v)})
        self.isotropicLines = [v for v in self.lines if hermitian(v, v) == ZERO]
        self.nonisotropicLines = [v for v in self.lines if hermitian(v, v) != ZERO]
        self._lineIndex = {
            "isotropic": {v: k for k, v in enumerate(self.isotropicLines)},
            "nonisotropic": {v: k for k, v in enumerate(self.nonisotropicLines)},
        }

    def __len__(self):
        return len(self.elements)

    def __contains__(self, M):
        return M in self.index

    def inverse(self, M):
        return conj_transpose(M)

    def conjugate(self, g, M):
        return mat_mul(mat_mul(g, M), conj_transpose(g))

    def closure(self, generators):
        seen = {IDENTITY}
        queue = deque([IDENTITY])
        while queue:
            M = queue.popleft()
            for g in generators:
                P = mat_mul(M, g)
                if P not in seen:
                    seen.add(P)
                    queue.append(P)
        return seen

    def _findGenerators(self):
        generators = []
        subgroup = {IDENTITY}
        for M in self.elements:
            if len(subgroup) == len(self.elements):
                break
            if M in subgroup:
                continue
            generators.append(M)
            subgroup = self.closure(generators)
        return generators

    def center(self):
        return [
            M for M in self.elements
            if all(mat_mul(M, g) == mat_mul(g, M) for g in self.generators)
        ]

    def linePermutation(self, M, which="isotropic"):
        lines = self.isotropicLines if which == "isotropic" else self.nonisotropicLines
        index = self._lineIndex[which]
        return [index[normalize(mat_vec(M, v))] for v in lines]

    def permutationGroup(self, which="isotropic"):
        return PermutationGroup([Permutation(self.linePermutation(g, which)) for g in self.generators])


def enumerate_su3():
    # Unitary matrices by orthonormal completion of columns, then det = 1
    vectors = list(itertools.product(range(9), repeat=3))
    unit = [v for v in vectors if hermitian(v, v) == ONE]
    gu3Count = 0
    elements = []
    for c1 in unit:
        for c2 in unit:
            if hermitian(c2, c1) != ZERO:
                continue
            # conj(c1 x c2) spans the orthogonal complement of <c1, c2>
            w = tuple(CONJ[x] for x in _cross(c1, c2))
            for mu in NONZERO:
                c3 = scale(mu, w)
                if hermitian(c3, c3) != ONE:
                    continue
                gu3Count += 1
                M = from_columns(c1, c2, c3)
                if determinant(M) == ONE:
                    elements.append(M)
    if gu3Count != GU3_ORDER:
        raise InconsistentDataError("found %d unitary matrices, expected %d" % (gu3Count, GU3_ORDER))
    if len(elements) != SU3_ORDER:
        raise InconsistentDataError("found %d special unitary matrices, expected %d" % (len(elements), SU3_ORDER))
    table = GroupTable(sorted(elements), gu3Count)
    if table.center() != [IDENTITY]:
        raise InconsistentDataError("SU3(F9) should have trivial center")
    return table


def line_action_cycle_type(table, M, which="isotropic"):
    structure = Permutation(table.linePermutation(M, which)).cycle_structure
    return tuple(sorted(structure.items()))


def orbit_degrees(table, K=ScalarSubgroup.TRIVIAL):
    # Orbits of SU3(F9) x K on nonzero vectors, counted in K-classes
    remaining = {v for v in itertools.product(range(9), repeat=3) if any(v)}
    sizes = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            images = [mat_vec(g, v) for g in table.generators]
            images.extend(scale(mu, v) for mu in K.scalars)
            for w in images:
                if w not in orbit:
                    orbit.add(w)
                    queue.append(w)
        remaining -= orbit
        sizes.append(len(orbit) // len(K.scalars))
    return sorted(sizes)
