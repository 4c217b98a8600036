# Resolvent method for Frobenius classes.
#
# For a monic integral f with roots r_1..r_n permuted by a group G and a
# parameter polynomial h, every class C gets
#
#   Gamma_C(X) = prod_{s in C} (X - sum_i h(r_i) r_{s(i)})
#
# and Frob_p lies in C exactly when Gamma_C vanishes mod p at
# x_p = Tr_{A_p/F_p}(a^p h(a)), A_p = F_p[x]/f(x), as long as the Gamma_C
# stay coprime mod p. The index i of r_i is the position of the root in
# ordered_roots(f), sorted by real then imaginary part.

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
import re
import string

import mpmath
from sympy import factorint

from lib.Devissage.Algebra.Ddf import ddf_cycle_type, format_cycle_type, reduce_mod_p
from lib.Devissage.Algebra.Domains import QQ
from lib.Devissage.Algebra.GFPoly import (
    gf_degree,
    gf_is_squarefree,
    gf_monic,
    gf_mulmod,
    gf_powx_mod,
    gf_rem,
)
from lib.Devissage.Algebra.NumberTheory import is_prime
from lib.Devissage.Algebra.PolyText import (
    content_lines,
    format_coefficient_list,
    parse_coefficient_list,
)
from lib.Devissage.Algebra.Resultant import resultant
from lib.Devissage.Algebra.UniPoly import UniPoly, clear_denominators, rational_poly
from lib.Devissage.Errors import (
    BadInputError,
    CompositeModulusError,
    InconsistentDataError,
    InsufficientPrecisionError,
    RamifiedPrimeError,
    UnsuitableParameterError,
)

DEFAULT_PRECISION = 64
MAX_PRECISION = 2048


@dataclass
class DokContext:
    f: UniPoly
    h: UniPoly
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        self.f = rational_poly(self.f)
        self.h = rational_poly(self.h)
        if self.f.degree < 1 or self.f.lc() != 1:
            raise BadInputError("f must be monic of positive degree")
        if any(c.denominator != 1 for c in self.f.coeffs):
            raise BadInputError("f must have integral coefficients")


@dataclass
class ResolventSet:
    f: UniPoly
    h: UniPoly
    resolvents: dict
    cycleTypes: dict = field(default_factory=dict)
    collisionPrimes: tuple = ()
    precision: int = DEFAULT_PRECISION

    @property
    def labels(self):
        return sorted(self.resolvents)

    def __getitem__(self, label):
        return self.resolvents[label]

    def serialize(self):
        lines = [
            "# resolvents Gamma_C, coefficients constant first",
            "f: " + format_coefficient_list(self.f),
            "h: " + format_coefficient_list(self.h),
            "precision: %d" % self.precision,
        ]
        for label in self.labels:
            cycleType = self.cycleTypes.get(label)
            tag = " [%s]" % format_cycle_type(cycleType).replace(" ", ",") if cycleType else ""
            lines.append("%s%s: %s" % (label, tag, format_coefficient_list(self.resolvents[label])))
        lines.append("collisions: " + " ".join(str(q) for q in self.collisionPrimes))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text):
        values = {}
        resolvents, cycleTypes = {}, {}
        for line in content_lines(text):
            key, sep, rest = line.partition(":")
            if not sep:
                raise BadInputError("resolvent line without ':': %r" % line)
            key = key.strip()
            if key in ("f", "h", "precision", "collisions"):
                values[key] = rest.strip()
                continue
            m = _CLASS_KEY.fullmatch(key)
            if not m:
                raise BadInputError("bad class label %r" % key)
            label = m.group(1)
            if label in resolvents:
                raise BadInputError("duplicate class %s" % label)
            resolvents[label] = parse_coefficient_list(rest)
            if m.group(2):
                cycleTypes[label] = _parse_cycle_tag(m.group(2))
        if "h" not in values or not resolvents:
            raise BadInputError("resolvent text needs an 'h:' line and at least one class")
        return cls(
            f=parse_coefficient_list(values["f"]) if values.get("f") else UniPoly.zero(QQ),
            h=parse_coefficient_list(values["h"]),
            resolvents=resolvents,
            cycleTypes=cycleTypes,
            collisionPrimes=tuple(int(q) for q in values.get("collisions", "").split()),
            precision=int(values.get("precision", DEFAULT_PRECISION)),
        )


_CLASS_KEY = re.compile(r"(\w+)(?:\s*\[([0-9^,]+)\])?")


def _parse_cycle_tag(text):
    parts = []
    for token in text.split(","):
        d, _, m = token.partition("^")
        parts.append((int(d), int(m) if m else 1))
    return tuple(sorted(parts))


def _check_prime(p):
    if p < 2 or not is_prime(p):
        raise CompositeModulusError("%d is not prime" % p)


def _prepare(ctx, p):
    F, _ = reduce_mod_p(ctx.f, p)
    if gf_degree(F) != ctx.f.degree or not gf_is_squarefree(gf_monic(F, p), p):
        raise RamifiedPrimeError("collision-risk prime: f is not squarefree mod %d" % p)
    H, _ = reduce_mod_p(ctx.h, p)
    b = gf_mulmod(gf_powx_mod(p, F, p), gf_rem(H, F, p), F, p)
    return F, b


def power_sums(F, p):
    # Newton's identities for the monic F: s_k = sum of k-th powers of roots
    n = gf_degree(F)
    s = [n % p]
    for k in range(1, n):
        acc = k * F[n - k]
        for i in range(1, k):
            acc += F[n - i] * s[k - i]
        s.append(-acc % p)
    return s


def dok_trace_invariant(ctx, p):
    _check_prime(p)
    F, b = _prepare(ctx, p)
    s = power_sums(F, p)
    return sum(c * s[j] for j, c in enumerate(b)) % p


def dok_trace_invariant_matrix(ctx, p):
    # Trace of multiplication by b read off the matrix diagonal
    _check_prime(p)
    F, b = _prepare(ctx, p)
    total = 0
    for j in range(gf_degree(F)):
        column = gf_mulmod(b, [0] * j + [1], F, p)
        if j < len(column):
            total += column[j]
    return total % p


def _compose(s, t):
    return tuple(s[t[i]] for i in range(len(t)))


def _inverse(s):
    inv = [0] * len(s)
    for i, j in enumerate(s):
        inv[j] = i
    return tuple(inv)


def _order(s):
    identity = tuple(range(len(s)))
    n, power = 1, s
    while power != identity:
        power = _compose(power, s)
        n += 1
    return n


def _cycle_type(s):
    seen, lengths = set(), {}
    for start in range(len(s)):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = s[i]
            length += 1
        lengths[length] = lengths.get(length, 0) + 1
    return tuple(sorted(lengths.items()))


def _normalize_generators(generators, n):
    gens = []
    for g in generators:
        g = tuple(getattr(g, "array_form", g))
        if len(g) < n:
            g = g + tuple(range(len(g), n))
        if sorted(g) != list(range(n)):
            raise BadInputError("%r is not a permutation of %d roots" % (g, n))
        gens.append(g)
    return gens


def group_closure(generators, n):
    identity = tuple(range(n))
    seen = {identity}
    queue = deque([identity])
    while queue:
        s = queue.popleft()
        for g in generators:
            t = _compose(g, s)
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def permutation_classes(group):
    # {label: sorted members}, labelled by element order then size
    unseen = set(group)
    raw = []
    while unseen:
        s = min(unseen)
        members = {_compose(_compose(g, s), _inverse(g)) for g in group}
        unseen -= members
        raw.append((_order(s), len(members), min(members), sorted(members)))
    raw.sort()
    classes, letters = {}, {}
    for order, _, _, members in raw:
        k = letters.get(order, 0)
        letters[order] = k + 1
        classes["%d%s" % (order, string.ascii_uppercase[k])] = members
    return classes


def _product(values):
    # Coefficients of prod (X - v), constant first
    coeffs = [mpmath.mpc(1)]
    for v in values:
        nxt = [mpmath.mpc(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= v * c
        coeffs = nxt
    return coeffs


def _round(coeffs, tol):
    rounded = []
    for c in coeffs:
        nearest = int(mpmath.nint(c.real))
        scale = max(1, abs(nearest))
        if abs(c.imag) > tol * scale or abs(c.real - nearest) > tol * scale:
            raise InsufficientPrecisionError("resolvent coefficient %s is not close to an integer" % mpmath.nstr(c, 20))
        rounded.append(nearest)
    return rounded


def _residual_ok(coeffs, values, tol):
    for v in values:
        acc, size = mpmath.mpc(0), mpmath.mpf(0)
        for c in reversed(coeffs):
            acc = acc * v + c
            size = size * abs(v) + abs(c)
        if abs(acc) > tol * max(1, size):
            return False
    return True


def _root_key(r, digits):
    scale = mpmath.mpf(10) ** digits
    return (int(mpmath.nint(r.real * scale)), int(mpmath.nint(r.imag * scale)))


def ordered_roots(f, precision=DEFAULT_PRECISION):
    """Complex roots of f in the order generator indices refer to.

    Roots are sorted by real part, then imaginary part, both rounded to
    half the working precision so that conjugate pairs share a real key.
    Index i of a generator tuple is the i-th root of this list.
    """
    f = rational_poly(f)
    n = f.degree
    with mpmath.workdps(precision):
        fcoeffs = [int(c) for c in reversed(f.coeffs)]
        try:
            roots = mpmath.polyroots(fcoeffs, maxsteps=50 + 10 * n, extraprec=2 * precision)
        except mpmath.NoConvergence:
            raise InsufficientPrecisionError("roots of f did not converge at %d digits" % precision)
        return sorted(roots, key=lambda r: _root_key(r, precision // 2))


def build_resolvents(f, generators, h, precision=DEFAULT_PRECISION):
    """Resolvents of every class of the group generated by generators.

    Generators permute root indices in the order given by ordered_roots.
    """
    ctx = DokContext(f, h, precision)
    n = ctx.f.degree
    gens = _normalize_generators(generators, n)
    group = group_closure(gens, n)
    classes = permutation_classes(group)

    # Integral parameter d*h keeps every Gamma integral; rescale afterwards
    d, hInt = clear_denominators(ctx.h)
    tol = mpmath.mpf(10) ** (-(precision // 2))

    resolvents, cycleTypes = {}, {}
    with mpmath.workdps(precision):
        roots = ordered_roots(ctx.f, precision)
        weights = [mpmath.polyval([int(c) for c in reversed(hInt.coeffs)] or [0], r) for r in roots]
        for label, members in classes.items():
            values = [sum(weights[i] * roots[s[i]] for i in range(n)) for s in members]
            coeffs = _product(values)
            rounded = _round(coeffs, tol)
            if not _residual_ok([mpmath.mpf(c) for c in rounded], values, tol):
                raise InsufficientPrecisionError("resolvent %s fails the residual bound" % label)
            size = len(members)
            resolvents[label] = UniPoly(
                [Fraction(c * d ** k, d ** size) for k, c in enumerate(rounded)], QQ
            )
            cycleTypes[label] = _cycle_type(members[0])

    labels = sorted(resolvents)
    collisions = set()
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if resolvents[a].gcd(resolvents[b]).degree > 0:
                raise UnsuitableParameterError(
                    "unsuitable parameter h: resolvents %s and %s share a factor" % (a, b)
                )
            _, A = clear_denominators(resolvents[a])
            _, B = clear_denominators(resolvents[b])
            collisions |= set(factorint(abs(resultant(A, B))))
    return ResolventSet(
        f=ctx.f,
        h=ctx.h,
        resolvents=resolvents,
        cycleTypes=cycleTypes,
        collisionPrimes=tuple(sorted(collisions)),
        precision=precision,
    )


def build_resolvents_auto(f, generators, h, precision=DEFAULT_PRECISION, maxPrecision=MAX_PRECISION):
    # Doubles the working precision until two successive runs agree
    previous = None
    while precision <= maxPrecision:
        try:
            current = build_resolvents(f, generators, h, precision)
        except InsufficientPrecisionError:
            precision *= 2
            continue
        if previous is not None and previous.resolvents == current.resolvents:
            return current
        previous = current
        precision *= 2
    raise InsufficientPrecisionError(
        "resolvents not stable up to %d digits; generators must index the roots "
        "in ordered_roots order and generate the Galois group" % maxPrecision
    )


def _eval_mod(poly, x, p):
    acc = 0
    for c in reversed(poly.coeffs):
        if c.denominator % p == 0:
            raise RamifiedPrimeError("resolvent denominator divisible by %d" % p)
        acc = (acc * x + c.numerator * pow(c.denominator, -1, p)) % p
    return acc


def match_resolvent(rs, ctx, p, warn=None):
    """Labels of the resolvents vanishing at x_p, in label order.

    More than one label means p is a collision prime for this h; the
    whole set is returned and warn, when given, receives a message.
    """
    xp = dok_trace_invariant(ctx, p)
    vanishing = tuple(label for label in rs.labels if _eval_mod(rs[label], xp, p) == 0)
    if not vanishing:
        raise InconsistentDataError("no resolvent vanishes at x_%d = %d" % (p, xp))
    if len(vanishing) > 1 and warn is not None:
        warn("several resolvents vanish at x_%d = %d: %s" % (p, xp, " ".join(vanishing)))
    return vanishing


def factorization_pattern_oracle(rs, p):
    # Classes whose cycle type matches the factorization of f mod p
    observed = ddf_cycle_type(rs.f, p)
    return tuple(label for label in rs.labels if rs.cycleTypes.get(label) == observed)
