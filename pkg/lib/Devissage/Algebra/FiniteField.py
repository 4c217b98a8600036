# Prime fields F_p and their extensions F_p[x]/(m(x)).
#
# A context object carries the modulus and performs the arithmetic; FFElem
# is a thin immutable handle so elements can sit inside UniPoly and be
# hashed into tables. Contexts hold no mutable state and can be shared
# between threads.

from fractions import Fraction
import itertools

from lib.Devissage.Algebra.GFPoly import (
    gf_inverse_mod,
    gf_is_irreducible,
    gf_mul,
    gf_rem,
    gf_strip,
)
from lib.Devissage.Algebra.NumberTheory import is_prime
from lib.Devissage.Errors import CompositeModulusError, NotIrreducibleError


class FFElem:

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def _other(self, other):
        if isinstance(other, FFElem):
            if other.ctx != self.ctx:
                raise TypeError("elements of different fields")
            return other
        try:
            return self.ctx.convert(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.ctx.add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.ctx.sub(self, o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.ctx.sub(o, self)

    def __neg__(self):
        return self.ctx.neg(self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.ctx.mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.ctx.mul(self, self.ctx.inverse(o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.ctx.mul(o, self.ctx.inverse(self))

    def __pow__(self, n):
        if n < 0:
            return self.ctx.inverse(self) ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = self.ctx.mul(result, base)
            n >>= 1
            if n:
                base = self.ctx.mul(base, base)
        return result

    def __eq__(self, other):
        if isinstance(other, FFElem):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.ctx.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def isZero(self):
        return not any(self.coeffs)

    def toInt(self):
        # Base-p digits, constant coefficient least significant
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.ctx.p + c
        return n

    def frobenius(self):
        return self ** self.ctx.p

    def __repr__(self):
        return "FFElem(%s, %r)" % (self.ctx, self.coeffs)

    def __str__(self):
        return self.ctx.format(self)


class FiniteFieldCtx:

    isField = True

    def __init__(self, p, k, modulus):
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.characteristic = p
        self.order = p ** k
        self.zero = FFElem(self, (0,) * k)
        self.one = FFElem(self, (1,) + (0,) * (k - 1))

    def convert(self, value):
        if isinstance(value, FFElem):
            if value.ctx == self:
                return value
            raise TypeError("element of %s is not in %s" % (value.ctx, self))
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return FFElem(self, (value % self.p,) + (0,) * (self.k - 1))
        if isinstance(value, Fraction):
            return self.convert(value.numerator) * self.inverse(self.convert(value.denominator))
        raise TypeError("cannot convert %r into %s" % (value, self))

    def element(self, coeffs):
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.k:
            cs = gf_rem(cs, list(self.modulus), self.p)
        cs = list(cs) + [0] * (self.k - len(cs))
        return FFElem(self, tuple(cs))

    def fromInt(self, n):
        cs = []
        for _ in range(self.k):
            n, c = divmod(n, self.p)
            cs.append(c)
        return FFElem(self, tuple(cs))

    def elements(self):
        for cs in itertools.product(range(self.p), repeat=self.k):
            yield FFElem(self, tuple(reversed(cs)))

    def isZero(self, a):
        return not any(a.coeffs)

    def add(self, a, b):
        p = self.p
        return FFElem(self, tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a, b):
        p = self.p
        return FFElem(self, tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a):
        p = self.p
        return FFElem(self, tuple((-x) % p for x in a.coeffs))

    def mul(self, a, b):
        if self.k == 1:
            return FFElem(self, (a.coeffs[0] * b.coeffs[0] % self.p,))
        prod = gf_rem(gf_mul(list(a.coeffs), list(b.coeffs), self.p), list(self.modulus), self.p)
        return FFElem(self, tuple(prod) + (0,) * (self.k - len(prod)))

    def inverse(self, a):
        if self.isZero(a):
            raise ZeroDivisionError("inverse of zero in %s" % self)
        if self.k == 1:
            return FFElem(self, (pow(a.coeffs[0], -1, self.p),))
        inv = gf_inverse_mod(gf_strip(list(a.coeffs)), list(self.modulus), self.p)
        return FFElem(self, tuple(inv) + (0,) * (self.k - len(inv)))

    def exquo(self, a, b):
        return self.mul(a, self.inverse(b))

    def format(self, a):
        if self.k == 1:
            return str(a.coeffs[0])
        terms = []
        for i, c in enumerate(a.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "g" if i == 1 else "g^%d" % i
                terms.append(mono if c == 1 else "%d*%s" % (c, mono))
        return "+".join(terms) if terms else "0"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteFieldCtx)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))


class PrimeFieldCtx(FiniteFieldCtx):

    def __init__(self, p, verify=True):
        if verify and not is_prime(p):
            raise CompositeModulusError("%d is not prime" % p)
        super().__init__(p, 1, (0, 1))

    def __repr__(self):
        if self.p.bit_length() > 64:
            return "GF(<%d-digit prime>)" % len(str(self.p))
        return "GF(%d)" % self.p


class ExtFieldCtx(FiniteFieldCtx):

    def __init__(self, p, k, modulus=None, verify=True):
        if verify and not is_prime(p):
            raise CompositeModulusError("%d is not prime" % p)
        if modulus is None:
            modulus = least_irreducible(p, k)
        modulus = [c % p for c in modulus]
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise NotIrreducibleError("extension modulus must be monic of degree %d" % k)
        if verify and not gf_is_irreducible(modulus, p):
            raise NotIrreducibleError("modulus %r is reducible mod %d" % (modulus, p))
        super().__init__(p, k, modulus)

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.k)


def least_irreducible(p, k):
    # Lexicographically least monic irreducible of degree k: lower
    # coefficients are read as base-p digits, highest digit most significant.
    for n in range(p ** k):
        lower = []
        m = n
        for _ in range(k):
            m, c = divmod(m, p)
            lower.append(c)
        candidate = lower + [1]
        if gf_is_irreducible(candidate, p):
            return candidate
    raise NotIrreducibleError("no irreducible polynomial of degree %d over F_%d" % (k, p))
