# Places of the rational function field Q(lambda): monic irreducible
# polynomials, plus the place at infinity.

from sympy import divisors

from lib.Devissage.Algebra.Ddf import irreducibility_witness
from lib.Devissage.Algebra.Domains import QQ
from lib.Devissage.Algebra.RationalFunction import RationalFunction
from lib.Devissage.Algebra.UniPoly import UniPoly, clear_denominators, rational_poly
from lib.Devissage.Errors import BadInputError, UnsupportedError

INFINITY_LABEL = "∞"


class Place:

    __slots__ = ("poly",)

    def __init__(self, poly=None):
        if poly is not None:
            poly = rational_poly(poly)
            if poly.degree < 1:
                raise BadInputError("a place needs a non-constant polynomial")
            poly = poly.monic()
        self.poly = poly

    @classmethod
    def infinity(cls):
        return cls(None)

    @classmethod
    def at(cls, value):
        # The degree one place lambda = value
        return cls(UniPoly([-QQ.convert(value), 1], QQ))

    @property
    def isInfinite(self):
        return self.poly is None

    @property
    def residueDegree(self):
        return 1 if self.poly is None else self.poly.degree

    def root(self):
        if self.poly is None or self.poly.degree != 1:
            return None
        return -self.poly.coeffs[0]

    def label(self):
        if self.poly is None:
            return INFINITY_LABEL
        r = self.root()
        if r is not None:
            return "λ=%s" % QQ.format(r)
        return "%s=0" % self.poly.format("λ")

    def sortKey(self):
        if self.poly is None:
            return (1, 0, ())
        return (0, self.poly.degree, tuple(abs(c) for c in self.poly.coeffs), self.poly.coeffs)

    def valuation(self, r):
        return place_valuation(r, self)

    def __eq__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        return self.poly == other.poly

    def __lt__(self, other):
        return self.sortKey() < other.sortKey()

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        if self.poly is None:
            return INFINITY_LABEL
        return self.poly.format("λ")

    def __repr__(self):
        return "Place(%s)" % self


def _poly_valuation(f, pi):
    v = 0
    while True:
        q, r = divmod(f, pi)
        if not r.isZero():
            return v
        f = q
        v += 1


def place_valuation(r, P):
    if not isinstance(r, RationalFunction):
        r = RationalFunction(r)
    if r.isZero():
        raise BadInputError("valuation of the zero function")
    if P.isInfinite:
        # lambda = 1/mu: f(1/mu) = mu^(-deg f) * rev(f)(mu) and rev(f)(0) != 0
        num, den = r.num, r.den
        return (_poly_valuation(num.reverse(), UniPoly.gen(QQ)) - num.degree) - (
            _poly_valuation(den.reverse(), UniPoly.gen(QQ)) - den.degree
        )
    return _poly_valuation(r.num, P.poly) - _poly_valuation(r.den, P.poly)


def squarefree_decomposition(f):
    # Yun's algorithm over QQ: [(g, i), ...] with f = lc * prod g^i, g monic squarefree
    f = rational_poly(f)
    if f.degree < 1:
        return []
    df = f.derivative()
    a = f.gcd(df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    i = 1
    out = []
    while b.degree > 0:
        a = b.gcd(d)
        b = b // a
        c = d // a
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
        d = c - b.derivative()
    return out


def rational_roots(f):
    _, g = clear_denominators(rational_poly(f))
    g = g.primitive()
    coeffs = list(g.coeffs)
    roots = set()
    while coeffs and coeffs[0] == 0:
        roots.add(0)
        coeffs.pop(0)
    if len(coeffs) < 2:
        return sorted(roots)
    lead, const = abs(coeffs[-1]), abs(coeffs[0])
    for num in divisors(const):
        for den in divisors(lead):
            for candidate in (QQ.convert(num) / den, -QQ.convert(num) / den):
                if g(candidate) == 0:
                    roots.add(candidate)
    return sorted(roots)


def factor_places(f, bound=500):
    # Places of Q(lambda) dividing f, with multiplicity
    places = []
    for g, mult in squarefree_decomposition(f):
        for root in rational_roots(g):
            places.append((Place.at(root), mult))
            g = g // UniPoly([-root, 1], QQ)
        if g.degree < 1:
            continue
        if g.degree > 3 and irreducibility_witness(g, bound) is None:
            raise UnsupportedError(
                "cannot certify %s irreducible; higher degree places are not supported" % g.format("λ")
            )
        # Without rational roots a factor of degree 2 or 3 is irreducible
        places.append((Place(g), mult))
    return sorted(places, key=lambda pm: pm[0].sortKey())
