from fractions import Fraction

import pytest

from lib.Devissage.Algebra.Domains import QQ
from lib.Devissage.Algebra.FiniteField import ExtFieldCtx
from lib.Devissage.Algebra.UniPoly import UniPoly
from lib.Devissage.Errors import (
    BadInputError,
    CompositeModulusError,
    DegenerateSpecializationError,
    SingularFibrationError,
)
from lib.Devissage.Fibration.BadLocus import bad_fibres, bad_locus
from lib.Devissage.Fibration.DivisionPolynomial import division_polynomial
from lib.Devissage.Fibration.FibrationCurve import (
    FibrationCurve,
    LAMBDA,
    TWIST_POLY,
    quadratic_twist,
    untwisted_fibration,
)
from lib.Devissage.Fibration.PlaneModel import (
    fiber_consistency_check,
    squarefree_at,
    three_torsion_y_values,
)
from lib.Devissage.Monodromy.Place import Place
from lib.Devissage.Verify.FibrationChecks import BAD_LOCUS, expected_j


def test_j_invariant_of_both_fibrations(fibration):
    expected = expected_j()
    assert fibration.j == expected
    assert untwisted_fibration().j == expected


def test_twisted_discriminant_is_sixth_power_times_untwisted(fibration):
    assert fibration.discriminant == untwisted_fibration().discriminant * TWIST_POLY ** 6


def test_bad_locus(fibration):
    assert sorted(place.label() for place in bad_locus(fibration)) == sorted(BAD_LOCUS)


def test_bad_fibres_carry_multiplicity_and_splitting(fibration):
    fibres = {f.label(): f for f in bad_fibres(fibration)}
    assert fibres["λ=0"].multiplicity == 8
    assert fibres["λ=1"].multiplicity == 4
    assert fibres["λ=-1"].multiplicity == 4
    assert fibres["λ^2 - 2*λ - 1=0"].multiplicity == 6
    assert not fibres["λ^2 - 2*λ - 1=0"].split
    assert fibres["∞"].split


def test_singular_and_degenerate_curves():
    with pytest.raises(SingularFibrationError):
        FibrationCurve(0, 0, 0)
    with pytest.raises(BadInputError):
        quadratic_twist(untwisted_fibration(), UniPoly.zero(QQ))


def test_division_polynomial_degree(fibration):
    psi3 = division_polynomial(fibration, 3)
    assert psi3.degree == 4
    psi5 = division_polynomial(fibration, 5)
    assert psi5.degree == 12


def test_fibre_specialisation():
    E = untwisted_fibration()
    assert E.fibreAt(Fraction(1)) == (2, -4, -8)
    assert E.fibreModP(1, 7) == (2, 3, 6)


def test_three_torsion_on_a_small_curve():
    # y^2 = x^3 + 1 over F_7 has 3-torsion points (0, +-1) and (-1 cube roots ...)
    values = three_torsion_y_values(0, 0, 1, 7)
    assert 1 in values and 6 in values
    assert len(values) == 8


def enumerated_three_torsion_y_values(a2, a4, a6, p):
    # Walk F_{p^3} and F_{p^2} \ F_p, which hold every root of a cubic over F_p
    values = []
    for k in (2, 3):
        ctx = ExtFieldCtx(p, k)
        for x in ctx.elements():
            if k == 2 and x.coeffs[1] == 0:
                continue
            psi3 = x ** 4 * 3 + x ** 3 * (4 * a2) + x * x * (6 * a4) + x * (12 * a6) + (4 * a2 * a6 - a4 * a4)
            if psi3:
                continue
            g = x * x * x + x * x * a2 + x * a4 + a6
            values.extend(y0 for y0 in range(1, p) if g == y0 * y0)
    return sorted(values)


@pytest.mark.parametrize("a2, a4, a6, p", [(0, 0, 1, 7), (2, 3, 5, 11), (1, 0, 4, 13), (0, 5, 2, 7)])
def test_three_torsion_against_enumeration(a2, a4, a6, p):
    assert three_torsion_y_values(a2, a4, a6, p) == enumerated_three_torsion_y_values(a2, a4, a6, p)


@pytest.mark.slow
def test_model_squarefree_at_two(plane_model):
    assert squarefree_at(plane_model, 2)


@pytest.mark.slow
@pytest.mark.parametrize("p, lam0", [(7, 2), (11, 3), (13, 5), (17, 4), (23, 7), (29, 10)])
def test_fibre_consistency(fibration, plane_model, p, lam0):
    assert fiber_consistency_check(p, lam0, fibration, plane_model)


def test_fibre_consistency_rejects_bad_input(fibration):
    with pytest.raises(BadInputError):
        fiber_consistency_check(3, 1, fibration)
    with pytest.raises(CompositeModulusError):
        fiber_consistency_check(15, 1, fibration)
    with pytest.raises(DegenerateSpecializationError):
        fiber_consistency_check(7, 0, fibration)


def test_places():
    assert Place.at(0).label() == "λ=0"
    assert Place.infinity().label() == "∞"
    assert Place(LAMBDA * LAMBDA - 2 * LAMBDA - 1).label() == "λ^2 - 2*λ - 1=0"
    assert Place.infinity().valuation(LAMBDA ** 3) == -3
    assert Place.at(1).valuation(LAMBDA * (LAMBDA - 1) ** 2) == 2
    with pytest.raises(BadInputError):
        Place(UniPoly([3], QQ))
