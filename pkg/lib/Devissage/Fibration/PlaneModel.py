# Plane models of the l-torsion cover, obtained by eliminating x between
# the division polynomial and the Weierstrass equation, and the checks that
# tie a specialized model back to actual torsion points.

from fractions import Fraction

from lib.Devissage.Algebra.BiPoly import BiPoly
from lib.Devissage.Algebra.GFPoly import (
    gf_add,
    gf_divmod,
    gf_eval,
    gf_from_ints,
    gf_mulmod,
    gf_quo,
    gf_roots,
    gf_scale,
    gf_sub,
)
from lib.Devissage.Algebra.NumberTheory import is_prime
from lib.Devissage.Algebra.Resultant import resultant
from lib.Devissage.Algebra.UniPoly import PolyRing, UniPoly
from lib.Devissage.Errors import (
    BadInputError,
    CompositeModulusError,
    DegenerateSpecializationError,
)
from lib.Devissage.Fibration.DivisionPolynomial import coefficient_ring, division_polynomial
from lib.Devissage.Fibration.FibrationCurve import twisted_fibration


class PlaneModel:

    def __init__(self, poly, ell):
        self.poly = poly
        self.ell = ell

    @property
    def bidegree(self):
        return self.poly.bidegree

    def leadingYCoefficient(self):
        return self.poly.coefficientInY(self.bidegree[1])

    def signAgainst(self, other):
        # +1 or -1 when the polynomials agree up to that sign, 0 otherwise
        target = other.poly if isinstance(other, PlaneModel) else other
        if self.poly == target:
            return 1
        if self.poly == -target:
            return -1
        return 0

    def differences(self, other, limit=10):
        # First few terms where the two models disagree, for reports
        target = other.poly if isinstance(other, PlaneModel) else other
        keys = sorted(set(self.poly.terms) | set(target.terms), key=lambda k: (-k[1], -k[0]))
        out = []
        for key in keys:
            mine, theirs = self.poly.coefficient(*key), target.coefficient(*key)
            if mine != theirs:
                out.append((key, mine, theirs))
                if len(out) >= limit:
                    break
        return out

    def reduceAt(self, lam0, p):
        # Model(lam0, y) mod p as an F_p coefficient list in y
        coeffs = [0] * (self.bidegree[1] + 1)
        for (ex, ey), c in self.poly.terms.items():
            if c.denominator % p == 0:
                raise BadInputError("model coefficient %s is not integral at %d" % (c, p))
            c = c.numerator * pow(c.denominator, -1, p)
            coeffs[ey] = (coeffs[ey] + c * pow(lam0, ex, p)) % p
        return gf_from_ints(coeffs, p)

    def __repr__(self):
        return "PlaneModel(ell=%d, bidegree=%r, %d terms)" % (self.ell, self.bidegree, len(self.poly))


def torsion_plane_model(E, ell):
    if ell < 3 or not is_prime(ell):
        raise BadInputError("torsion plane models need an odd prime, got %d" % ell)
    inner = coefficient_ring(E)
    outer = PolyRing(inner, "y")
    psi = division_polynomial(E, ell, inner)

    # Move psi from K[lambda][x] into K[lambda][y][x]
    psi = psi.mapCoefficients(outer.convert, outer)
    y = UniPoly.gen(inner)
    a2, a4, a6 = (_lift(inner, a) for a in E.coefficients())
    # y^2 - (x^3 + a2 x^2 + a4 x + a6)
    weierstrass = UniPoly([y * y - a6, -a4, -a2, -inner.one], outer)

    # UniPoly in y over K[lambda]; lambda becomes x in the emitted model
    eliminated = resultant(psi, weierstrass)
    return PlaneModel(BiPoly.fromNested(eliminated), ell)


def _lift(ring, a):
    if ring.base == a.domain:
        return a
    return a.mapCoefficients(ring.base.convert, ring.base)


def squarefree_at(model, lam0):
    lam0 = Fraction(lam0)
    if model.leadingYCoefficient()(lam0) == 0:
        raise DegenerateSpecializationError(
            "degenerate specialization: leading y-coefficient vanishes at %s" % lam0
        )
    R0 = model.poly.evaluateX(lam0)
    if R0.degree < 1:
        return True
    return R0.gcd(R0.derivative()).degree == 0


def _irreducible_factors_small(h, p):
    # Monic irreducible factors (without multiplicity) of a polynomial of
    # degree <= 3 over F_p: linear factors by search, the remainder is
    # irreducible since it has no roots.
    factors = []
    rest = list(h)
    for r in sorted(set(gf_roots(h, p))):
        factors.append([(-r) % p, 1])
        while len(rest) > 1 and gf_eval(rest, r, p) == 0:
            rest = gf_quo(rest, [(-r) % p, 1], p)
    if len(rest) > 2:
        factors.append(gf_scale(rest, pow(rest[-1], -1, p), p))
    return factors


def _is_three_torsion(m, y0, a2, a4, p):
    # P = (X, y0) with X the class of x in F_p[x]/(m); 3P = O iff 2P = -P
    X = gf_divmod([0, 1], m, p)[1]
    X2 = gf_mulmod(X, X, m, p)
    num = gf_add(gf_add(gf_scale(X2, 3, p), gf_scale(X, 2 * a2, p), p), [a4 % p], p)
    slope = gf_scale(num, pow(2 * y0, -1, p), p)
    x2 = gf_sub(gf_sub(gf_mulmod(slope, slope, m, p), [a2 % p], p), gf_scale(X, 2, p), p)
    y2 = gf_sub(gf_mulmod(slope, gf_sub(X, x2, p), m, p), [y0 % p], p)
    return x2 == X and y2 == gf_from_ints([-y0], p)


def three_torsion_y_values(a2, a4, a6, p):
    # Multiset of the F_p-rational y-coordinates of the nonzero 3-torsion of
    # y^2 = x^3 + a2 x^2 + a4 x + a6 over the algebraic closure of F_p. For
    # every y0 the points with that ordinate have x among the roots of the
    # cubic g(x) - y0^2, which live in extensions of degree at most three.
    # Each irreducible factor stands for its conjugate roots at once; since
    # y0 != 0, 2P = -P there is the vanishing of the 3-division polynomial
    # 3x^4 + 4a2 x^3 + 6a4 x^2 + 12a6 x + 4a2 a6 - a4^2 at x.
    values = []
    for y0 in range(1, p):
        h = gf_from_ints([a6 - y0 * y0, a4, a2, 1], p)
        for factor in _irreducible_factors_small(h, p):
            if _is_three_torsion(factor, y0, a2, a4, p):
                values.extend([y0] * (len(factor) - 1))
    return sorted(values)


def fiber_consistency_check(p, lam0, curve=None, model=None):
    if p in (2, 3):
        raise BadInputError("fibre checks need p > 3, got %d" % p)
    if not is_prime(p):
        raise CompositeModulusError("%d is not prime" % p)
    curve = curve or twisted_fibration()
    lam0 %= p
    a2, a4, a6 = curve.fibreModP(lam0, p)
    disc = curve.discriminant(Fraction(lam0))
    if disc.numerator * pow(disc.denominator, -1, p) % p == 0:
        raise DegenerateSpecializationError("bad fibre: discriminant vanishes at %d mod %d" % (lam0, p))
    if model is None:
        model = torsion_plane_model(curve, 3)
    reduced = model.reduceAt(lam0, p)
    if len(reduced) - 1 != model.bidegree[1]:
        raise DegenerateSpecializationError("model drops degree at %d mod %d" % (lam0, p))
    return sorted(gf_roots(reduced, p)) == three_torsion_y_values(a2, a4, a6, p)
