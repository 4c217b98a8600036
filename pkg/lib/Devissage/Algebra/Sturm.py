# Real root counting with Sturm sequences in exact integer arithmetic.

from lib.Devissage.Algebra.UniPoly import clear_denominators
from lib.Devissage.Errors import BadInputError


def _sign(n):
    return (n > 0) - (n < 0)


def sturm_sequence(f):
    # Primitive pseudo-remainder sequence; multipliers are kept positive so
    # the signs agree with the rational Sturm sequence term by term.
    _, a = clear_denominators(f)
    a = a.primitive()
    seq = [a, a.derivative().primitive()]
    while not seq[-1].isZero() and seq[-1].degree > 0:
        prev, cur = seq[-2], seq[-1]
        delta = prev.degree - cur.degree
        r = prev.prem(cur)
        if _sign(cur.lc()) ** (delta + 1) > 0:
            r = -r
        if r.isZero():
            break
        seq.append(r.primitive() if _sign(r.lc()) > 0 else -((-r).primitive()))
    return seq


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def sturm_real_root_count(f):
    if f.degree < 1:
        return 0
    seq = sturm_sequence(f)
    if seq[-1].isZero() or seq[-1].degree > 0:
        raise BadInputError("Sturm count needs a squarefree polynomial")
    at_plus = [_sign(s.lc()) for s in seq]
    at_minus = [_sign(s.lc()) * (-1) ** s.degree for s in seq]
    return _variations(at_minus) - _variations(at_plus)
