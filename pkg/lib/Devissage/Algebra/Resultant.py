# Resultants and discriminants over an integral domain.
#
# Convention: Res(f, g) is the determinant of the Sylvester matrix with the
# deg(g) shifted copies of f in the top rows, so
# Res(f, g) = lc(f)^deg(g) * prod g(r) over the roots r of f.

from lib.Devissage.Algebra.UniPoly import UniPoly
from lib.Devissage.Errors import UndefinedResultantError


def resultant(f, g):
    # Subresultant PRS without content removal; every division below is
    # exact in the coefficient ring.
    if f.isZero() or g.isZero():
        raise UndefinedResultantError("undefined resultant: zero polynomial input")
    if f.domain != g.domain:
        raise TypeError("resultant of polynomials over different domains")
    R = f.domain
    a, b = f, g
    sign = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            sign = -sign
    if b.degree == 0:
        return _signed(b.lc() ** a.degree, sign)

    gg = R.one
    h = R.one
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            sign = -sign
        r = a.prem(b)
        a = b
        if r.isZero():
            return R.zero
        b = r.exactDivScalar(gg * h ** delta)
        gg = a.lc()
        if delta == 0:
            pass
        elif delta == 1:
            h = gg
        else:
            h = R.exquo(gg ** delta, h ** (delta - 1))
        if b.degree == 0:
            break

    n = a.degree
    if n == 1:
        h = b.lc()
    else:
        h = R.exquo(b.lc() ** n, h ** (n - 1))
    return _signed(h, sign)


def _signed(value, sign):
    return value if sign > 0 else -value


def discriminant(f):
    # disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)
    d = f.degree
    if d < 1:
        raise UndefinedResultantError("discriminant of a constant polynomial")
    res = resultant(f, f.derivative())
    disc = f.domain.exquo(res, f.lc())
    if (d * (d - 1) // 2) % 2:
        disc = -disc
    return disc


def sylvester_matrix(f, g):
    m, n = f.degree, g.degree
    size = m + n
    zero = f.domain.zero
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def bareiss_determinant(rows, domain):
    # Fraction-free Gaussian elimination
    M = [list(r) for r in rows]
    n = len(M)
    if n == 0:
        return domain.one
    sign = 1
    prev = domain.one
    for k in range(n - 1):
        if domain.isZero(M[k][k]):
            swap = next((i for i in range(k + 1, n) if not domain.isZero(M[i][k])), None)
            if swap is None:
                return domain.zero
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = domain.exquo(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_resultant(f, g):
    if f.isZero() or g.isZero():
        raise UndefinedResultantError("undefined resultant: zero polynomial input")
    if f.degree == 0 and g.degree == 0:
        return f.domain.one
    return bareiss_determinant(sylvester_matrix(f, g), f.domain)


def specialize(poly, value):
    # Evaluates the coefficients of a polynomial over a PolyRing at value
    base = poly.domain.base
    return UniPoly([c(value) for c in poly.coeffs], base)
