# Hecke eigenvalues a_p in Z[i] and the characteristic polynomials of
# Frobenius they determine modulo 3.

from dataclasses import dataclass

from lib.Devissage.Algebra.FiniteField import PrimeFieldCtx
from lib.Devissage.Algebra.GFPoly import gf_is_irreducible
from lib.Devissage.Algebra.NumberTheory import kronecker_symbol
from lib.Devissage.Algebra.UniPoly import UniPoly
from lib.Devissage.Errors import InconsistentDataError, RamifiedPrimeError
from lib.Devissage.Group.F9 import F9_CTX, f9, format_f9, from_elem, parse_gaussian, to_elem

F3_CTX = PrimeFieldCtx(3)


@dataclass(frozen=True)
class HeckeEigenvalue:
    re: int
    im: int

    @classmethod
    def parse(cls, token):
        return cls(*parse_gaussian(token))

    @property
    def mod3(self):
        return f9(self.re, self.im)

    def conjugate(self):
        return HeckeEigenvalue(self.re, -self.im)

    @property
    def inTwoZi(self):
        # a_p lies in Z[2i]
        return self.im % 2 == 0

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        imag = "i" if self.im == 1 else "-i" if self.im == -1 else "%di" % self.im
        if self.re == 0:
            return imag
        return "%s%+d" % (imag, self.re)


@dataclass
class CharPoly3:
    chi: UniPoly
    chiPrime: UniPoly

    def chiCodes(self):
        return tuple(from_elem(c) for c in self.chi.coeffs)


def _code(a):
    if isinstance(a, HeckeEigenvalue):
        return a.mod3
    if isinstance(a, tuple):
        return f9(*a)
    return a


def _conjugate_poly(poly):
    return poly.mapCoefficients(lambda c: c ** 3, poly.domain)


def chi_p(a, p):
    if p in (2, 3):
        raise RamifiedPrimeError("ramified: chi_p is undefined at p = %d" % p)
    a = to_elem(_code(a))
    abar = a ** 3
    P = F9_CTX.convert(p)
    chi = UniPoly([-(P ** 3), P * abar, -a, F9_CTX.one], F9_CTX)
    norm = chi * _conjugate_poly(chi)
    coeffs = []
    for c in norm.coeffs:
        if c.coeffs[1] != 0:
            raise InconsistentDataError("norm of chi_p has a coefficient outside F3")
        coeffs.append(c.coeffs[0])
    return CharPoly3(chi, UniPoly(coeffs, F3_CTX))


def twisted_chi_prime(charPoly, eps):
    # chi'(eps * x) for eps = +-1
    return UniPoly(
        [c * (eps ** k) for k, c in enumerate(charPoly.chiPrime.coeffs)], F3_CTX
    )


def twist_sign(p):
    # (6/p), the quadratic character twisting the representation on the cover
    return kronecker_symbol(6, p)


def is_irreducible_f3(poly):
    return gf_is_irreducible([c.coeffs[0] for c in poly.coeffs], 3)


def chi_p_mod2(a, p):
    # Coefficients of x^3 - a x^2 + p conj(a) x - p^3 over Z[i], reduced mod 2
    if isinstance(a, tuple):
        a = HeckeEigenvalue(*a)
    coeffs = [
        (-(p ** 3), 0),
        (p * a.re, -p * a.im),
        (-a.re, -a.im),
        (1, 0),
    ]
    return tuple((re % 2, im % 2) for re, im in coeffs)


# (x - 1)^3 = x^3 + x^2 + x + 1 mod 2
TRIVIAL_MOD2 = ((1, 0), (1, 0), (1, 0), (1, 0))


def format_chi(charPoly):
    terms = []
    for k, code in reversed(list(enumerate(charPoly.chiCodes()))):
        if code == 0:
            continue
        mono = "" if k == 0 else "x" if k == 1 else "x^%d" % k
        coeff = format_f9(code)
        if mono and coeff == "1":
            terms.append(mono)
        elif mono:
            terms.append("(%s)*%s" % (coeff, mono))
        else:
            terms.append("(%s)" % coeff)
    return " + ".join(terms) if terms else "0"


def ap_mod3_text(a):
    return format_f9(_code(a))
