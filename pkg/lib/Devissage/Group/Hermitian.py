# Counting vectors of prescribed Hermitian norm in F_{q^2}^n.

from dataclasses import dataclass
import itertools

from lib.Devissage.Algebra.FiniteField import ExtFieldCtx
from lib.Devissage.Algebra.NumberTheory import is_prime
from lib.Devissage.Errors import BadInputError, UnsupportedError

UNIT = "unit"
ZERO = "zero"


def hermitian_count(n, q, which=UNIT):
    # Vectors v with H(v, v) equal to a fixed unit of F_q (A_n), or to zero
    # with v = 0 included (B_n), for a non-degenerate form.
    if n < 1 or q < 2:
        raise BadInputError("hermitian counts need n >= 1 and q >= 2")
    if which == UNIT:
        return q ** (2 * n - 1) + (-q) ** (n - 1)
    if which == ZERO:
        return q ** (2 * n - 1) - (q - 1) * (-q) ** (n - 1)
    raise BadInputError("unknown hermitian count %r" % which)


@dataclass
class HermitianSpace:
    n: int
    q: int
    gram: tuple = None

    def __post_init__(self):
        if not is_prime(self.q):
            raise UnsupportedError("explicit Hermitian spaces need a prime q, got %d" % self.q)
        self.field = ExtFieldCtx(self.q, 2)
        one, zero = self.field.one, self.field.zero
        if self.gram is None:
            self.gram = tuple(
                tuple(one if i == j else zero for j in range(self.n)) for i in range(self.n)
            )
        for i in range(self.n):
            for j in range(self.n):
                if self.gram[i][j] != self.conj(self.gram[j][i]):
                    raise BadInputError("Gram matrix is not Hermitian")

    def conj(self, x):
        return x ** self.q

    def form(self, u, v):
        total = self.field.zero
        for i in range(self.n):
            for j in range(self.n):
                if self.gram[i][j]:
                    total = total + u[i] * self.gram[i][j] * self.conj(v[j])
        return total

    def vectors(self):
        return itertools.product(list(self.field.elements()), repeat=self.n)


def hermitian_count_bruteforce(n, q, which=UNIT, value=1):
    space = HermitianSpace(n, q)
    if which == ZERO:
        target = space.field.zero
    elif which == UNIT:
        target = space.field.convert(value)
        if target.isZero():
            raise BadInputError("unit value must be nonzero")
    else:
        raise BadInputError("unknown hermitian count %r" % which)
    return sum(1 for v in space.vectors() if space.form(v, v) == target)
