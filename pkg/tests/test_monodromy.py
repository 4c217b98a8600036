import pytest

from lib.Devissage.Errors import BadInputError, InconsistentDataError, UnsupportedError
from lib.Devissage.Monodromy.Genus import (
    burnside_orbit_count,
    closed_form_genus,
    cover_genus,
    enumerated_orbit_count,
    fibration_genus,
    orbit_count,
)
from lib.Devissage.Monodromy.Kodaira import (
    KodairaType,
    determinant,
    kodaira_classify,
    kodaira_table,
    minimal_triple,
    monodromy_of,
)
from lib.Devissage.Verify.KodairaChecks import EXPECTED_TYPES

ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


@pytest.mark.parametrize(
    "valuations, expected",
    [
        ((0, 0, 0), "I0"),
        ((0, 0, 1), "I1"),
        ((0, 0, 4), "I4"),
        ((1, 1, 2), "II"),
        ((1, 2, 3), "III"),
        ((2, 2, 4), "IV"),
        ((2, 3, 6), "I0*"),
        ((2, 3, 8), "I2*"),
        ((3, 4, 8), "IV*"),
        ((3, 5, 9), "III*"),
        ((4, 5, 10), "II*"),
    ],
)
def test_kodaira_classify(valuations, expected):
    t = kodaira_classify(*valuations)
    assert str(t) == expected
    assert KodairaType.parse(expected) == t
    assert t.expectedDiscriminantValuation == valuations[2]


def test_minimal_triple_is_invariant_under_rescaling():
    for triple in [(2, 3, 8), (0, 0, 4), (1, 1, 2), (3, 5, 9)]:
        shifted = tuple(v + w for v, w in zip(triple, (4, 6, 12)))
        assert minimal_triple(*shifted) == triple
        negative = tuple(v - 2 * w for v, w in zip(triple, (4, 6, 12)))
        assert minimal_triple(*negative) == triple


def test_inconsistent_valuations():
    with pytest.raises(InconsistentDataError):
        kodaira_classify(1, 1, 5)
    with pytest.raises(BadInputError):
        KodairaType.parse("V")


@pytest.mark.parametrize("text", ["I0", "I3", "I2*", "II", "III", "IV", "IV*", "III*", "II*"])
def test_monodromy_has_determinant_one(text):
    assert determinant(monodromy_of(KodairaType.parse(text))) == 1


def test_unknown_family_has_no_monodromy():
    with pytest.raises(UnsupportedError):
        monodromy_of(KodairaType("V"))


def test_kodaira_table_of_the_fibration(fibration):
    types = {r.place.label(): str(r.kodairaType) for r in kodaira_table(fibration)}
    assert types == EXPECTED_TYPES


def test_in_star_shortcut_note(fibration):
    rows = {r.place.label(): r for r in kodaira_table(fibration, 5)}
    assert rows["λ=0"].alternativeOrbits == 8
    assert rows["λ=1"].alternativeOrbits is None


@pytest.mark.parametrize("ell, genus", [(3, 7), (5, 25), (7, 55)])
def test_genus(fibration, ell, genus):
    report = fibration_genus(fibration, ell)
    assert report.genus == genus
    assert report.matchesClosedForm
    assert report.degree == ell * ell - 1


@pytest.mark.parametrize("ell", ODD_PRIMES)
def test_closed_form_for_small_primes(fibration, ell):
    assert fibration_genus(fibration, ell).genus == closed_form_genus(ell)


@pytest.mark.parametrize("ell", ODD_PRIMES)
def test_burnside_equals_enumeration(ell):
    for text in ["I1", "I2", "I4", "I0*", "I2*", "II", "III", "IV", "IV*", "III*", "II*"]:
        T = monodromy_of(KodairaType.parse(text))
        assert burnside_orbit_count(T, ell) == enumerated_orbit_count(T, ell)


def test_unipotent_orbit_count():
    # l - 1 fixed vectors plus l - 1 orbits of length l
    assert orbit_count(((1, 1), (0, 1)), 7) == 12
    with pytest.raises(BadInputError):
        orbit_count(((2, 0), (0, 1)), 7)
    with pytest.raises(BadInputError):
        orbit_count(((1, 1), (0, 1)), 9)


def test_cover_genus_needs_odd_prime(fibration):
    with pytest.raises(BadInputError):
        fibration_genus(fibration, 2)
