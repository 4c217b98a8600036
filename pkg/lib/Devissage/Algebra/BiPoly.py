# Sparse bivariate polynomials in (x, y) with rational coefficients.

from fractions import Fraction

from lib.Devissage.Algebra.Domains import QQ
from lib.Devissage.Algebra.UniPoly import UniPoly


class BiPoly:

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for (ex, ey), c in (terms or {}).items():
            if ex < 0 or ey < 0:
                raise ValueError("negative exponent in bivariate term")
            c = Fraction(c)
            if c != 0:
                cleaned[(ex, ey)] = c
        self.terms = cleaned

    @classmethod
    def fromNested(cls, poly):
        # poly: UniPoly in y whose coefficients are UniPoly in x
        terms = {}
        for ey, inner in enumerate(poly.coeffs):
            for ex, c in enumerate(inner.coeffs):
                if c != 0:
                    terms[(ex, ey)] = c
        return cls(terms)

    @property
    def bidegree(self):
        if not self.terms:
            return (-1, -1)
        return (
            max(ex for ex, _ in self.terms),
            max(ey for _, ey in self.terms),
        )

    def coefficient(self, ex, ey):
        return self.terms.get((ex, ey), Fraction(0))

    def isZero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return BiPoly(terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            terms = {}
            for (ax, ay), a in self.terms.items():
                for (bx, by), b in other.terms.items():
                    key = (ax + bx, ay + by)
                    terms[key] = terms.get(key, 0) + a * b
            return BiPoly(terms)
        c = Fraction(other)
        return BiPoly({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluateX(self, x0):
        # Specialize x to x0 and return the result as a UniPoly in y over QQ
        ey_max = self.bidegree[1]
        coeffs = [Fraction(0)] * (ey_max + 1)
        for (ex, ey), c in self.terms.items():
            coeffs[ey] += c * Fraction(x0) ** ex
        return UniPoly(coeffs, QQ)

    def coefficientInY(self, ey):
        # Coefficient of y^ey as a UniPoly in x
        ex_max = max((ex for ex, e in self.terms if e == ey), default=-1)
        coeffs = [Fraction(0)] * (ex_max + 1)
        for (ex, e), c in self.terms.items():
            if e == ey:
                coeffs[ex] = c
        return UniPoly(coeffs, QQ)

    def derivativeY(self):
        return BiPoly({(ex, ey - 1): c * ey for (ex, ey), c in self.terms.items() if ey > 0})

    def sortedTerms(self):
        # Decreasing y-degree, then decreasing x-degree
        return sorted(self.terms.items(), key=lambda t: (-t[0][1], -t[0][0]))

    def __repr__(self):
        return "BiPoly(%d terms, bidegree %r)" % (len(self.terms), self.bidegree)

    def __str__(self):
        parts = []
        for (ex, ey), c in self.sortedTerms():
            mono = []
            if ex:
                mono.append("x" if ex == 1 else "x^%d" % ex)
            if ey:
                mono.append("y" if ey == 1 else "y^%d" % ey)
            text = QQ.format(c)
            if mono:
                text = ("" if c == 1 else "-" if c == -1 else text + "*") + "*".join(mono)
            parts.append(text)
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"
