import random

import pytest

from lib.Devissage.Algebra.FiniteField import ExtFieldCtx, PrimeFieldCtx, least_irreducible
from lib.Devissage.Algebra.GFPoly import gf_is_irreducible
from lib.Devissage.Errors import CompositeModulusError, NotIrreducibleError

FIELDS = [(3, 2), (5, 3), (7, 2), (2, 4)]


def random_element(rng, ctx):
    return ctx.fromInt(rng.randrange(ctx.order))


@pytest.mark.parametrize("p, k", FIELDS)
def test_least_irreducible(p, k):
    modulus = least_irreducible(p, k)
    assert len(modulus) == k + 1 and modulus[-1] == 1
    assert gf_is_irreducible(modulus, p)


def test_least_irreducible_is_least():
    assert least_irreducible(3, 2) == [1, 0, 1]
    assert least_irreducible(2, 4) == [1, 1, 0, 0, 1]


@pytest.mark.parametrize("p, k", FIELDS)
def test_field_axioms(p, k):
    ctx = ExtFieldCtx(p, k)
    rng = random.Random(p * 100 + k)
    for _ in range(200):
        a, b, c = (random_element(rng, ctx) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == ctx.zero
        if a:
            assert a * ctx.inverse(a) == ctx.one
            assert a / a == 1


@pytest.mark.parametrize("p, k", FIELDS)
def test_frobenius_of_full_order_is_identity(p, k):
    ctx = ExtFieldCtx(p, k)
    elements = list(ctx.elements())
    assert len(set(elements)) == ctx.order
    for a in elements:
        assert a ** ctx.order == a
    # Frobenius fixes exactly the prime field
    fixed = [a for a in elements if a.frobenius() == a]
    assert len(fixed) == p


def test_from_int_round_trip():
    ctx = ExtFieldCtx(5, 3)
    assert [ctx.fromInt(n).toInt() for n in range(ctx.order)] == list(range(ctx.order))


def test_bad_fields():
    with pytest.raises(CompositeModulusError):
        PrimeFieldCtx(9)
    with pytest.raises(CompositeModulusError):
        ExtFieldCtx(4, 2)
    # x^2 + 2 = (x - 1)(x + 1) mod 3
    with pytest.raises(NotIrreducibleError):
        ExtFieldCtx(3, 2, modulus=[2, 0, 1])
    with pytest.raises(NotIrreducibleError):
        ExtFieldCtx(3, 2, modulus=[1, 1])
