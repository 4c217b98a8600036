from fractions import Fraction
import random

import pytest
import sympy

from lib.Devissage.Algebra.Ddf import (
    ddf_cycle_type,
    format_cycle_type,
    irreducibility_witness,
    subset_sums,
)
from lib.Devissage.Algebra.Domains import QQ, ZZ
from lib.Devissage.Algebra.GFPoly import gf_is_irreducible, gf_mul, gf_powx_mod, gf_rem
from lib.Devissage.Algebra.PolyText import format_poly, parse_poly
from lib.Devissage.Algebra.Resultant import discriminant, resultant, sylvester_resultant
from lib.Devissage.Algebra.Sturm import sturm_real_root_count
from lib.Devissage.Algebra.UniPoly import UniPoly
from lib.Devissage.Errors import BadInputError, RamifiedPrimeError, UndefinedResultantError

X = sympy.Symbol("x")


def to_sympy(f):
    return sum(sympy.Integer(int(c)) * X ** k for k, c in enumerate(f.coeffs))


def random_poly(rng, degree):
    coeffs = [rng.randint(-9, 9) for _ in range(degree)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
    return UniPoly(coeffs, ZZ)


def test_unipoly_arithmetic():
    x = UniPoly.gen(QQ)
    f = x * x - 2
    assert f.degree == 2
    assert f(Fraction(3)) == 7
    assert str(f) == "x^2 - 2"
    q, r = divmod(x ** 3 - 2, x - 1)
    assert q * (x - 1) + r == x ** 3 - 2
    assert r == UniPoly([-1], QQ)
    assert (x ** 2 - 1).gcd(x ** 2 - 2 * x + 1) == x - 1


def test_resultant_agrees_with_sympy():
    rng = random.Random(7)
    for _ in range(40):
        f = random_poly(rng, rng.randint(1, 6))
        g = random_poly(rng, rng.randint(1, 6))
        expected = sympy.resultant(to_sympy(f), to_sympy(g), X)
        assert resultant(f, g) == expected
        assert sylvester_resultant(f, g) == expected


def test_resultant_multiplicative():
    rng = random.Random(11)
    for _ in range(20):
        f, g, h = (random_poly(rng, rng.randint(1, 4)) for _ in range(3))
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


def test_resultant_swap_sign():
    rng = random.Random(23)
    for _ in range(30):
        f, g = random_poly(rng, rng.randint(1, 5)), random_poly(rng, rng.randint(1, 5))
        sign = (-1) ** (f.degree * g.degree)
        assert resultant(f, g) == sign * resultant(g, f)
        assert sylvester_resultant(f, g) == sign * sylvester_resultant(g, f)


def test_resultant_of_zero_polynomial():
    with pytest.raises(UndefinedResultantError):
        resultant(UniPoly.zero(ZZ), UniPoly([1, 1], ZZ))


def test_discriminant_quadratic_and_sign():
    b, c = 3, -5
    assert discriminant(UniPoly([c, b, 1], ZZ)) == b * b - 4 * c
    # x^3 - 2 has discriminant -108
    assert discriminant(UniPoly([-2, 0, 0, 1], ZZ)) == -108
    with pytest.raises(UndefinedResultantError):
        discriminant(UniPoly([5], ZZ))


def test_sturm_counts():
    x = UniPoly.gen(QQ)
    assert sturm_real_root_count((x * x - 2) * (x * x + 1)) == 2
    assert sturm_real_root_count(x ** 3 - 2) == 1
    assert sturm_real_root_count((x - 1) * (x - 2) * (x - 3) * (x + 5)) == 4


def test_gf_multiplication_and_powers():
    p = 101
    a, b = [1, 2, 3], [4, 0, 5, 6]
    naive = [0] * 6
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            naive[i + j] += x * y
    assert gf_mul(a, b, p) == [c % p for c in naive]
    f = [1, 0, 1]
    # x^p = x^(p mod 4) modulo x^2 + 1 since x^4 = 1
    assert gf_powx_mod(p, f, p) == gf_rem([0, 1], f, p)


def test_kronecker_multiplication_of_large_moduli():
    p = 10 ** 100 + 267
    rng = random.Random(3)
    a = [rng.randrange(p) for _ in range(8)]
    b = [rng.randrange(p) for _ in range(9)]
    naive = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            naive[i + j] += x * y
    assert gf_mul(a, b, p) == [c % p for c in naive]


@pytest.mark.parametrize(
    "p, expected",
    [(5, ((1, 1), (2, 1))), (7, ((3, 1),)), (31, ((1, 3),)), (13, ((3, 1),))],
)
def test_ddf_cycle_types_of_cube_root_of_two(p, expected):
    assert ddf_cycle_type(UniPoly([-2, 0, 0, 1], QQ), p) == expected


def test_ddf_rejects_ramified_primes():
    with pytest.raises(RamifiedPrimeError):
        ddf_cycle_type(UniPoly([1, 0, 1], QQ), 2)
    with pytest.raises(BadInputError):
        ddf_cycle_type(UniPoly([1, 0, 1], QQ))


def test_cycle_type_helpers():
    assert format_cycle_type(((1, 1), (3, 9))) == "1 3^9"
    assert subset_sums(((1, 1), (2, 1))) == {0, 1, 2, 3}
    assert gf_is_irreducible([1, 1, 1], 2)
    assert not gf_is_irreducible([1, 0, 1], 2)


def test_irreducibility_witness():
    assert irreducibility_witness(UniPoly([-2, 0, 0, 1], QQ)) == (7,)
    # x^4 + 1 is irreducible but splits into quadratics modulo every prime
    assert irreducibility_witness(UniPoly([1, 0, 0, 0, 1], QQ), 200) is None


def test_polytext_round_trip_and_errors():
    f = UniPoly([Fraction(1, 2), 0, -3, 1], QQ)
    assert parse_poly(format_poly(f, "a comment")) == f
    with pytest.raises(BadInputError):
        parse_poly("unipoly 2\n1\n2\n")
    with pytest.raises(BadInputError):
        parse_poly("trinomial\n1 2 3\n")
    with pytest.raises(BadInputError):
        parse_poly("bipoly\n1 1 2\n1 1 3\n")
