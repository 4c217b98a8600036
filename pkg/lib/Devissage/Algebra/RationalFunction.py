# Reduced quotients of polynomials over QQ.

from lib.Devissage.Algebra.Domains import QQ
from lib.Devissage.Algebra.UniPoly import UniPoly, rational_poly


class RationalFunction:

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, UniPoly):
            num = UniPoly([num], QQ)
        num = rational_poly(num)
        den = UniPoly.one(QQ) if den is None else rational_poly(den)
        if den.isZero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.isZero():
            self.num = num
            self.den = UniPoly.one(QQ)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num = num // g
            den = den // g
        # Denominator is kept monic
        lc = den.lc()
        self.num = num.scale(1 / lc)
        self.den = den.scale(1 / lc)

    def isZero(self):
        return self.num.isZero()

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, value):
        return self.num(value) / self.den(value)

    def __str__(self):
        if self.den.isConstant():
            return self.num.format("λ")
        return "(%s) / (%s)" % (self.num.format("λ"), self.den.format("λ"))

    def __repr__(self):
        return "RationalFunction(%r, %r)" % (self.num, self.den)
