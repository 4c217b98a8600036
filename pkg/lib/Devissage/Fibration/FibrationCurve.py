# Elliptic curves y^2 = x^3 + a2 x^2 + a4 x + a6 whose coefficients are
# polynomials in the fibration parameter lambda.

from lib.Devissage.Algebra.Domains import QQ
from lib.Devissage.Algebra.RationalFunction import RationalFunction
from lib.Devissage.Algebra.UniPoly import UniPoly, rational_poly
from lib.Devissage.Errors import BadInputError, SingularFibrationError

LAMBDA = UniPoly.gen(QQ)

# The twist parameter lambda*(lambda^2 - 2*lambda - 1)
TWIST_POLY = UniPoly([0, -1, -2, 1], QQ)


class FibrationCurve:

    name = ""

    def __init__(self, a2, a4, a6, name=""):
        self.a2 = _as_poly(a2)
        self.a4 = _as_poly(a4)
        self.a6 = _as_poly(a6)
        self.name = name

        # b- and c-invariants for a1 = a3 = 0
        self.b2 = self.a2 * 4
        self.b4 = self.a4 * 2
        self.b6 = self.a6 * 4
        self.b8 = self.a2 * self.a6 * 4 - self.a4 * self.a4
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        self.c4 = b2 * b2 - b4 * 24
        self.c6 = -(b2 ** 3) + b2 * b4 * 36 - b6 * 216
        self.discriminant = -(b2 * b2 * b8) - b4 ** 3 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9
        if self.discriminant.isZero():
            raise SingularFibrationError("singular fibration: discriminant vanishes identically")
        self._j = None

    @property
    def j(self):
        if self._j is None:
            self._j = RationalFunction(self.c4 ** 3, self.discriminant)
        return self._j

    def coefficients(self):
        return (self.a2, self.a4, self.a6)

    def cubic(self):
        # x^3 + a2 x^2 + a4 x + a6 as a polynomial in x over QQ[lambda]
        return (self.a6, self.a4, self.a2, UniPoly.one(QQ))

    def fibreAt(self, lam0):
        return tuple(a(lam0) for a in self.coefficients())

    def fibreModP(self, lam0, p):
        values = []
        for a in self.coefficients():
            v = a(lam0)
            if v.denominator % p == 0:
                raise BadInputError("coefficient not integral at %d" % p)
            values.append(v.numerator * pow(v.denominator, -1, p) % p)
        return tuple(values)

    def __eq__(self, other):
        if not isinstance(other, FibrationCurve):
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash(self.coefficients())

    def __repr__(self):
        return "FibrationCurve(a2=%s, a4=%s, a6=%s)" % tuple(
            a.format("λ") for a in self.coefficients()
        )


def _as_poly(value):
    if isinstance(value, UniPoly):
        return rational_poly(value)
    return UniPoly([value], QQ)


def weierstrass_invariants(E):
    return E.c4, E.c6, E.discriminant, E.j


def quadratic_twist(E, D):
    D = _as_poly(D)
    if D.isZero():
        raise BadInputError("quadratic twist by the zero polynomial")
    return FibrationCurve(
        D * E.a2,
        D * D * E.a4,
        D ** 3 * E.a6,
        name=(E.name + " twisted") if E.name else "",
    )


def untwisted_fibration():
    # y^2 = (x - 2l)(x + 2l)(x + l^2 + 1)
    l2 = LAMBDA * LAMBDA
    return FibrationCurve(l2 + 1, l2 * -4, l2 * (l2 + 1) * -4, name="E_lambda")


def twisted_fibration():
    return quadratic_twist(untwisted_fibration(), TWIST_POLY)
