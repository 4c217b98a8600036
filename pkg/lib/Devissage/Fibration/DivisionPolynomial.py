# Division polynomials of a fibration curve, as polynomials in x whose
# coefficients lie in K[lambda].
#
# Even-indexed entries are stored divided by y, so every cached value is a
# polynomial in x alone; y^2 is replaced by the cubic where it appears.

from lib.Devissage.Algebra.Domains import QQ, ZZ
from lib.Devissage.Algebra.UniPoly import PolyRing, UniPoly, integer_poly
from lib.Devissage.Errors import BadInputError, UnsupportedError


def coefficient_ring(curve):
    # ZZ[lambda] when the curve is integral, QQ[lambda] otherwise
    for a in curve.coefficients():
        if any(c.denominator != 1 for c in a.coeffs):
            return PolyRing(QQ, "λ")
    return PolyRing(ZZ, "λ")


class DivisionPolynomial:

    def __init__(self, curve, ring=None):
        self.curve = curve
        self.ring = ring or coefficient_ring(curve)
        self._cache = {}
        self._initcache()

    def _lift(self, a):
        if self.ring.base == ZZ:
            return integer_poly(a)
        return a

    def _initcache(self):
        R = self.ring
        b2, b4, b6, b8 = (self._lift(b) for b in (self.curve.b2, self.curve.b4, self.curve.b6, self.curve.b8))
        a2, a4, a6 = (self._lift(a) for a in self.curve.coefficients())

        def poly(*coeffs):
            return UniPoly([R.convert(c) for c in coeffs], R, convert=False)

        self._cache[0] = UniPoly.zero(R)
        self._cache[1] = UniPoly.one(R)
        self._cache[2] = poly(2)
        self._cache[3] = poly(b8, b6 * 3, b4 * 3, b2, 3)
        self._cache[4] = poly(
            b4 * b8 - b6 * b6,
            b2 * b8 - b4 * b6,
            b8 * 10,
            b6 * 10,
            b4 * 5,
            b2,
            2,
        ) * 2
        self._curvepoly = poly(a6, a4, a2, 1)

    def __getitem__(self, index):
        if index < 0:
            raise BadInputError("negative division polynomial index %d" % index)
        if index not in self._cache:
            m = index // 2
            if index % 2 == 1:
                if m % 2 == 0:
                    result = (self._curvepoly ** 2 * self[m + 2] * self[m] ** 3) - (
                        self[m - 1] * self[m + 1] ** 3
                    )
                else:
                    result = (self[m + 2] * self[m] ** 3) - (
                        self._curvepoly ** 2 * self[m - 1] * self[m + 1] ** 3
                    )
            else:
                bracket = (self[m + 2] * self[m - 1] ** 2) - (self[m - 2] * self[m + 1] ** 2)
                result = (self[m] * bracket).exactDivScalar(self.ring.convert(2))
            self._cache[index] = result
        return self._cache[index]

    def __len__(self):
        return len(self._cache)

    def __str__(self):
        return "DivisionPolys<%r, %d cached>" % (self.curve, len(self._cache))


def division_polynomial(E, ell, ring=None):
    if ell % 2 == 0:
        raise UnsupportedError("even torsion index %d is not supported" % ell)
    if ell < 3:
        raise BadInputError("torsion index must be an odd integer >= 3, got %d" % ell)
    return DivisionPolynomial(E, ring)[ell]


def rational_division_polynomial(E, ell):
    # Same polynomial with coefficients in QQ[lambda]
    return division_polynomial(E, ell, PolyRing(QQ, "λ"))
