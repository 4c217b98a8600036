import os.path

import pytest

from lib.Devissage import Fixtures
from lib.Devissage.Algebra.Domains import QQ
from lib.Devissage.Algebra.NumberTheory import primes_between
from lib.Devissage.Algebra.UniPoly import UniPoly
from lib.Devissage.Errors import (
    BadInputError,
    CompositeModulusError,
    InsufficientPrecisionError,
    RamifiedPrimeError,
    UnsuitableParameterError,
)
from lib.Devissage.Frobenius.Dokchitser import (
    DokContext,
    ResolventSet,
    build_resolvents,
    build_resolvents_auto,
    dok_trace_invariant,
    dok_trace_invariant_matrix,
    factorization_pattern_oracle,
    group_closure,
    match_resolvent,
    ordered_roots,
    permutation_classes,
)
from lib.Devissage.Verify.DokChecks import (
    C2_GENERATORS,
    GAUSS_F,
    S3_GENERATORS,
    TOY_F,
    TOY_H,
    oracle_mismatches,
)

X = UniPoly.gen(QQ)


@pytest.fixture(scope="module")
def toy():
    return build_resolvents_auto(TOY_F, S3_GENERATORS, TOY_H)


@pytest.mark.parametrize(
    "f, h, p, expected",
    [
        (GAUSS_F, UniPoly.zero(QQ), 7, 0),
        (GAUSS_F, X, 7, 2),
        (TOY_F, TOY_H, 31, 6),
        (TOY_F, TOY_H, 5, 0),
    ],
)
def test_trace_invariant(f, h, p, expected):
    assert dok_trace_invariant(DokContext(f, h), p) == expected


def test_trace_invariant_by_power_sums_and_by_matrix():
    f = X ** 5 - 3 * X ** 2 + X + 7
    h = X ** 3 + 2
    ctx = DokContext(f, h)
    for p in primes_between(5, 120):
        try:
            expected = dok_trace_invariant_matrix(ctx, p)
        except RamifiedPrimeError:
            continue
        assert dok_trace_invariant(ctx, p) == expected


def test_trace_invariant_errors():
    with pytest.raises(RamifiedPrimeError):
        dok_trace_invariant(DokContext(GAUSS_F, X), 2)
    with pytest.raises(CompositeModulusError):
        dok_trace_invariant(DokContext(GAUSS_F, X), 9)
    with pytest.raises(BadInputError):
        DokContext(2 * X ** 2 + 1, X)


def test_permutation_classes_of_s3():
    group = group_closure(S3_GENERATORS, 3)
    assert len(group) == 6
    classes = permutation_classes(group)
    assert {label: len(members) for label, members in classes.items()} == {"1A": 1, "2A": 3, "3A": 2}


def test_toy_resolvents(toy):
    assert str(toy["1A"]) == "x - 6"
    assert str(toy["2A"]) == "x^3"
    assert str(toy["3A"]) == "x^2 + 6*x + 36"
    assert set(toy.collisionPrimes) <= {2, 3}
    for label in toy.labels:
        assert toy[label].degree == len(permutation_classes(group_closure(S3_GENERATORS, 3))[label])


def test_toy_matches_fixture(toy, data_path):
    fixture = Fixtures.load_resolvents(os.path.join(data_path, Fixtures.RESOLVENT_TOY))
    assert fixture.resolvents == toy.resolvents
    assert fixture.cycleTypes == toy.cycleTypes


def test_serialization_round_trip(toy):
    again = ResolventSet.parse(toy.serialize())
    assert again.resolvents == toy.resolvents
    assert again.f == toy.f and again.h == toy.h
    assert again.collisionPrimes == toy.collisionPrimes


def test_match_resolvent(toy):
    ctx = DokContext(toy.f, toy.h)
    assert match_resolvent(toy, ctx, 31) == ("1A",)
    assert match_resolvent(toy, ctx, 5) == ("2A",)
    assert match_resolvent(toy, ctx, 7) == ("3A",)
    with pytest.raises(RamifiedPrimeError):
        match_resolvent(toy, ctx, 3)


def test_resolvents_agree_with_factorization(toy):
    compared, mismatches = oracle_mismatches(toy, 500)
    assert mismatches == []
    assert compared > 80
    assert factorization_pattern_oracle(toy, 31) == ("1A",)


def test_unsuitable_parameter():
    with pytest.raises(UnsuitableParameterError):
        build_resolvents(TOY_F, S3_GENERATORS, X)


def test_gaussian_resolvents():
    rs = build_resolvents_auto(GAUSS_F, C2_GENERATORS, X)
    assert str(rs["1A"]) == "x + 2"
    assert str(rs["2A"]) == "x - 2"
    assert oracle_mismatches(rs)[1] == []


def test_bad_generators():
    with pytest.raises(BadInputError):
        build_resolvents(TOY_F, [(0, 0, 1)], TOY_H)


def test_resolvent_text_errors():
    with pytest.raises(BadInputError):
        ResolventSet.parse("1A: -6 1\n")
    with pytest.raises(BadInputError):
        ResolventSet.parse("h: 0 1\n1A: 1\n1A: 2\n")


# x^4 - 2 has Galois group D4. Its roots in ordered_roots order are
# -a, -ia, ia, a with a = 2^(1/4).
QUARTIC_F = UniPoly([-2, 0, 0, 0, 1], QQ)
QUARTIC_H = UniPoly([0, 1, 0, 1], QQ)
# a -> ia -> -a -> -ia, and complex conjugation
D4_GENERATORS = [(1, 3, 0, 2), (0, 2, 1, 3)]


@pytest.fixture(scope="module")
def quartic():
    return build_resolvents_auto(QUARTIC_F, D4_GENERATORS, QUARTIC_H)


def test_ordered_roots_of_quartic():
    a = 2 ** 0.25
    roots = ordered_roots(QUARTIC_F)
    assert len(roots) == 4
    for root, expected in zip(roots, [-a, -1j * a, 1j * a, a]):
        assert abs(complex(root) - expected) < 1e-12


@pytest.mark.parametrize("precision", [32, 64, 256])
def test_ordered_roots_stable_across_precision(precision):
    low = [complex(r) for r in ordered_roots(QUARTIC_F, precision)]
    high = [complex(r) for r in ordered_roots(QUARTIC_F, 512)]
    assert low == pytest.approx(high)
    # Real part first, then imaginary part
    cubic = [complex(r) for r in ordered_roots(TOY_F, precision)]
    assert cubic[0].imag < 0 < cubic[1].imag
    assert cubic[2].imag == 0 and cubic[2].real > 0


def test_quartic_resolvents(quartic):
    assert len(group_closure(D4_GENERATORS, 4)) == 8
    assert str(quartic["1A"]) == "x - 8"
    assert str(quartic["2A"]) == "x + 8"
    assert str(quartic["4A"]) == "x^2 + 64"
    reflections = {str(quartic[label]) for label in quartic.labels if label.startswith("2") and label != "2A"}
    assert reflections == {"x^2 - 32", "x^2 + 32"}
    assert set(quartic.collisionPrimes) == {2, 3}


def test_quartic_matches_factorization(quartic):
    ctx = DokContext(quartic.f, quartic.h)
    # 73 = 3^2 + 64*1^2, so 2 is a fourth power mod 73
    assert match_resolvent(quartic, ctx, 73) == ("1A",)
    for p in primes_between(5, 300):
        matched = match_resolvent(quartic, ctx, p)
        assert len(matched) == 1
        assert matched[0] in factorization_pattern_oracle(quartic, p)


def test_generators_out_of_root_order():
    # The same dihedral shape, but labelled as if the roots were a, ia, -a, -ia
    with pytest.raises(InsufficientPrecisionError, match="ordered_roots"):
        build_resolvents_auto(QUARTIC_F, [(1, 2, 3, 0), (0, 3, 2, 1)], QUARTIC_H, 32, 128)


def test_several_vanishing_resolvents_warn():
    # x_7 = 2 for x^2 + 1 with h = x, and x - 9 agrees with x - 2 mod 7
    rs = ResolventSet(f=GAUSS_F, h=X, resolvents={"1A": X - 9, "2A": X - 2})
    warnings = []
    labels = match_resolvent(rs, DokContext(rs.f, rs.h), 7, warnings.append)
    assert labels == ("1A", "2A")
    assert len(warnings) == 1
    assert "x_7 = 2" in warnings[0]
    assert match_resolvent(rs, DokContext(rs.f, rs.h), 7) == ("1A", "2A")
