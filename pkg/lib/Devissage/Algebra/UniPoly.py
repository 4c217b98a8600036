# Dense univariate polynomials over a declared coefficient domain.
#
# Coefficients are stored constant term first in an immutable tuple. The
# domain may be ZZ, QQ, a finite field context or a PolyRing, which gives
# nested polynomials such as ZZ[lambda][y][x] for elimination.

from lib.Devissage.Algebra.Domains import QQ, ZZ
from lib.Devissage.Errors import InexactDivisionError

# Degree reported for the zero polynomial
ZERO_DEGREE = -1


class UniPoly:

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs, domain=QQ, convert=True):
        if convert:
            cs = [domain.convert(c) for c in coeffs]
        else:
            cs = list(coeffs)
        while cs and domain.isZero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.domain = domain

    @classmethod
    def zero(cls, domain=QQ):
        return cls([], domain)

    @classmethod
    def one(cls, domain=QQ):
        return cls([domain.one], domain, convert=False)

    @classmethod
    def gen(cls, domain=QQ):
        return cls([domain.zero, domain.one], domain, convert=False)

    @classmethod
    def monomial(cls, coeff, n, domain=QQ):
        return cls([domain.zero] * n + [domain.convert(coeff)], domain, convert=False)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            return self.domain.zero
        return self.coeffs[-1]

    def coefficient(self, n):
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.domain.zero

    def isZero(self):
        return not self.coeffs

    def isConstant(self):
        return len(self.coeffs) <= 1

    def isMonic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.domain.one

    def _coerce(self, other):
        if isinstance(other, UniPoly) and other.domain == self.domain:
            return other
        try:
            return UniPoly([self.domain.convert(other)], self.domain, convert=False)
        except TypeError:
            return None

    def _scalar(self, other):
        # Returns other as a domain element if it is not a same-level polynomial
        if isinstance(other, UniPoly) and other.domain == self.domain:
            return None
        try:
            return self.domain.convert(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] = res[i] + c
        return UniPoly(res, self.domain, convert=False)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.domain, convert=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        c = self._scalar(other)
        if c is not None:
            return self.scale(c)
        if not isinstance(other, UniPoly) or other.domain != self.domain:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly([], self.domain, convert=False)
        isZero = self.domain.isZero
        res = [self.domain.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if isZero(x):
                continue
            for j, y in enumerate(b):
                res[i + j] = res[i + j] + x * y
        return UniPoly(res, self.domain, convert=False)

    def __rmul__(self, other):
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def scale(self, c):
        if self.domain.isZero(c):
            return UniPoly([], self.domain, convert=False)
        return UniPoly([x * c for x in self.coeffs], self.domain, convert=False)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.one(self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.domain == other.domain and self.coeffs == other.coeffs
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.coeffs, self.domain))

    def __call__(self, value):
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self):
        return UniPoly(
            [c * i for i, c in enumerate(self.coeffs)][1:], self.domain, convert=False
        )

    def shift(self, n):
        # Multiplies by x^n
        if not self.coeffs:
            return self
        return UniPoly([self.domain.zero] * n + list(self.coeffs), self.domain, convert=False)

    def reverse(self, n=None):
        # x^n * f(1/x) with n = deg f by default
        if n is None:
            n = self.degree
        cs = list(self.coeffs) + [self.domain.zero] * (n + 1 - len(self.coeffs))
        return UniPoly(list(reversed(cs)), self.domain, convert=False)

    def mapCoefficients(self, fn, domain):
        return UniPoly([fn(c) for c in self.coeffs], domain)

    def compose(self, other):
        acc = UniPoly([], self.domain, convert=False)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def prem(self, other):
        # Pseudo-remainder: lc(other)^(deg self - deg other + 1) * self mod other
        if other.isZero():
            raise ZeroDivisionError("pseudo-remainder by the zero polynomial")
        d = other.degree
        if self.degree < d:
            return self
        isZero = self.domain.isZero
        b = other.coeffs
        lcb = b[-1]
        r = list(self.coeffs)
        e = len(r) - d
        while r and len(r) - 1 >= d:
            lcr = r[-1]
            shift = len(r) - 1 - d
            r = [c * lcb for c in r]
            for j in range(d):
                r[shift + j] = r[shift + j] - lcr * b[j]
            r.pop()
            while r and isZero(r[-1]):
                r.pop()
            e -= 1
        result = UniPoly(r, self.domain, convert=False)
        if e > 0 and r:
            result = result.scale(lcb ** e)
        return result

    def exactDiv(self, other):
        # Division in R[x] when other divides self exactly, R an integral domain
        if other.isZero():
            raise ZeroDivisionError("exact division by the zero polynomial")
        exquo = self.domain.exquo
        isZero = self.domain.isZero
        d = other.degree
        b = other.coeffs
        r = list(self.coeffs)
        if len(r) - 1 < d:
            if r:
                raise InexactDivisionError("divisor has larger degree than dividend")
            return UniPoly([], self.domain, convert=False)
        q = [self.domain.zero] * (len(r) - d)
        for k in range(len(r) - 1 - d, -1, -1):
            top = r[k + d]
            if isZero(top):
                continue
            c = exquo(top, b[-1])
            q[k] = c
            for j in range(d + 1):
                r[k + j] = r[k + j] - c * b[j]
        if any(not isZero(c) for c in r[:d]):
            raise InexactDivisionError("polynomial division leaves a remainder")
        return UniPoly(q, self.domain, convert=False)

    def exactDivScalar(self, c):
        exquo = self.domain.exquo
        return UniPoly([exquo(x, c) for x in self.coeffs], self.domain, convert=False)

    def __divmod__(self, other):
        # Euclidean division, only over fields
        if other.isZero():
            raise ZeroDivisionError("polynomial division by zero")
        inv = self.domain.inverse(other.lc())
        d = other.degree
        b = other.coeffs
        r = list(self.coeffs)
        if len(r) - 1 < d:
            return UniPoly([], self.domain, convert=False), self
        q = [self.domain.zero] * (len(r) - d)
        for k in range(len(r) - 1 - d, -1, -1):
            c = r[k + d] * inv
            q[k] = c
            for j in range(d + 1):
                r[k + j] = r[k + j] - c * b[j]
        return (
            UniPoly(q, self.domain, convert=False),
            UniPoly(r[:d], self.domain, convert=False),
        )

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.domain.inverse(self.lc()))

    def gcd(self, other):
        a, b = self, other
        while not b.isZero():
            a, b = b, a % b
        return a.monic()

    def content(self):
        # gcd of the coefficients, integer polynomials only
        g = 0
        for c in self.coeffs:
            g = _igcd(g, c)
        return g

    def primitive(self):
        g = self.content()
        if g == 0:
            return self
        if self.lc() < 0:
            g = -g
        return UniPoly([c // g for c in self.coeffs], self.domain, convert=False)

    def toList(self):
        return list(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return "UniPoly(%r, %r)" % (list(self.coeffs), self.domain)

    def __str__(self):
        return self.format("x")

    def format(self, var="x"):
        if not self.coeffs:
            return "0"
        terms = []
        fmt = getattr(self.domain, "format", str)
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if self.domain.isZero(c):
                continue
            text = fmt(c)
            if isinstance(c, UniPoly) and len(c.coeffs) > 1:
                text = "(" + text + ")"
            if i == 0:
                terms.append(text)
                continue
            mono = var if i == 1 else "%s^%d" % (var, i)
            if text == "1":
                terms.append(mono)
            elif text == "-1":
                terms.append("-" + mono)
            else:
                terms.append(text + "*" + mono)
        return " + ".join(terms).replace("+ -", "- ")


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


class PolyRing:

    isField = False

    def __init__(self, base, var="x"):
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.zero = UniPoly([], base, convert=False)
        self.one = UniPoly([base.one], base, convert=False)
        self.name = "%s[%s]" % (base, var)

    def convert(self, value):
        if isinstance(value, UniPoly) and value.domain == self.base:
            return value
        # Constants of deeper rings are lifted one level at a time
        return UniPoly([self.base.convert(value)], self.base, convert=False)

    def isZero(self, value):
        return not value.coeffs

    def exquo(self, a, b):
        return a.exactDiv(b)

    def format(self, value):
        return value.format(self.var)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.base == other.base
            and self.var == other.var
        )

    def __hash__(self):
        return hash((self.base, self.var))

    def __repr__(self):
        return self.name


def integer_poly(poly):
    # Moves a polynomial with integral rational coefficients into ZZ[x]
    return poly.mapCoefficients(ZZ.convert, ZZ)


def rational_poly(poly):
    return poly.mapCoefficients(QQ.convert, QQ)


def clear_denominators(poly):
    # Returns (d, g) with g = d * poly in ZZ[x], d > 0 minimal
    d = 1
    for c in poly.coeffs:
        den = getattr(c, "denominator", 1)
        d = d * den // _igcd(d, den)
    return d, poly.mapCoefficients(lambda c: ZZ.convert(c * d), ZZ)
