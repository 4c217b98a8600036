# Distinct-degree factorization over F_p and the cycle types it encodes.

from lib.Devissage.Algebra.GFPoly import (
    gf_compose_mod,
    gf_degree,
    gf_from_ints,
    gf_gcd,
    gf_is_squarefree,
    gf_monic,
    gf_power_table,
    gf_powx_mod,
    gf_quo,
    gf_rem,
    gf_sub,
)
from lib.Devissage.Algebra.NumberTheory import primes_between
from lib.Devissage.Errors import BadInputError, RamifiedPrimeError


def reduce_mod_p(f, p=None):
    # Accepts a UniPoly over a prime field, or over ZZ/QQ together with p
    ctx = getattr(f.domain, "p", None)
    if ctx is not None and getattr(f.domain, "k", 1) == 1:
        if p is not None and p != ctx:
            raise BadInputError("polynomial lives over F_%d, not F_%d" % (ctx, p))
        return [c.coeffs[0] for c in f.coeffs], ctx
    if p is None:
        raise BadInputError("a prime is needed to reduce an integral polynomial")
    coeffs = []
    for c in f.coeffs:
        den = getattr(c, "denominator", 1)
        num = getattr(c, "numerator", c)
        if den % p == 0:
            raise RamifiedPrimeError("denominator divisible by %d" % p)
        coeffs.append(num * pow(den, -1, p) % p)
    return gf_from_ints(coeffs, p), p


def ddf_degrees(F, p):
    # F monic squarefree int list mod p; returns {d: number of degree-d factors}
    counts = {}
    n = gf_degree(F)
    if n < 1:
        return counts
    x = [0, 1]
    X = gf_powx_mod(p, F, p)
    table = gf_power_table(X, F, p)
    g = F
    h = X
    d = 1
    while 2 * d <= gf_degree(g):
        t = gf_gcd(g, gf_sub(h, x, p), p)
        if gf_degree(t) > 0:
            counts[d] = gf_degree(t) // d
            g = gf_quo(g, t, p)
            h = gf_rem(h, g, p)
        d += 1
        if 2 * d > gf_degree(g):
            break
        # x^(p^d) from x^(p^(d-1)) by composing with x^p
        h = gf_rem(gf_compose_mod(h, table, F, p), g, p)
    if gf_degree(g) > 0:
        counts[gf_degree(g)] = counts.get(gf_degree(g), 0) + 1
    return counts


def ddf_cycle_type(f, p=None):
    F, p = reduce_mod_p(f, p)
    if gf_degree(F) != f.degree:
        raise RamifiedPrimeError("leading coefficient vanishes mod %d" % p)
    F = gf_monic(F, p)
    if not gf_is_squarefree(F, p):
        raise RamifiedPrimeError("ramified prime: polynomial is not squarefree mod %d" % p)
    counts = ddf_degrees(F, p)
    return tuple(sorted(counts.items()))


def cycle_type_partition(cycleType):
    # ((d, m), ...) -> sorted list of parts, e.g. ((1, 1), (3, 9)) -> [1, 3, ..., 3]
    parts = []
    for d, m in cycleType:
        parts.extend([d] * m)
    return sorted(parts)


def format_cycle_type(cycleType):
    return " ".join(
        "%d" % d if m == 1 else "%d^%d" % (d, m) for d, m in sorted(cycleType)
    )


def subset_sums(cycleType):
    # Degrees of all products of sub-multisets of the irreducible factors
    sums = {0}
    for d, m in cycleType:
        for _ in range(m):
            sums |= {s + d for s in sums}
    return sums


def irreducibility_witness(f, bound=500):
    # A proper factor over QQ has degree in the subset sums of the factor
    # degrees mod every unramified q. Returns the primes that shrank the
    # candidate set once it is empty, or None if it never empties below bound.
    possible = set(range(1, f.degree))
    if not possible:
        return ()
    witnesses = []
    for q in primes_between(2, bound):
        try:
            cycleType = ddf_cycle_type(f, q)
        except RamifiedPrimeError:
            continue
        narrowed = possible & subset_sums(cycleType)
        if narrowed != possible:
            witnesses.append(q)
            possible = narrowed
        if not possible:
            return tuple(witnesses)
    return None
