import os.path

import pytest

from lib.Devissage import Fixtures
from lib.Devissage.Errors import BadInputError, CompositeModulusError, InconsistentDataError, RamifiedPrimeError
from lib.Devissage.Frobenius.Classify import (
    TableRow,
    classify_frobenius,
    crosscheck_table,
    frobenius_sign,
    table_row,
)
from lib.Devissage.Frobenius.F28 import cycle_type_sweep, verify_f28
from lib.Devissage.Frobenius.Hecke import HeckeEigenvalue
from lib.Devissage.Group.F9 import CONJ, f9

pytestmark = pytest.mark.slow

AMBIGUOUS = [5, 31, 37, 53]


@pytest.fixture(scope="module")
def small_table(data_path):
    return Fixtures.load_table(os.path.join(data_path, Fixtures.AP_TABLE))


@pytest.mark.parametrize(
    "p, sign, ap",
    [(29, -1, f9(0, 0)), (43, 1, f9(-1, 0)), (61, 1, f9(0, -1)), (7, 1, f9(1, 1))],
)
def test_classify_known_primes(f28, classes, p, sign, ap):
    report = classify_frobenius(p, f28, classes)
    assert report.sign == sign == frobenius_sign(p)
    assert report.contains(ap)
    assert list(report.candidates) == sorted(report.candidates)
    shared = {c.isotropicType for c in classes if c.label in report.candidates}
    assert shared == {report.cycleType}


def test_candidate_traces_are_closed_under_conjugation(f28, classes):
    for p in [7, 11, 13, 17, 19, 23]:
        report = classify_frobenius(p, f28, classes)
        assert {CONJ[t] for t in report.apMod3} == set(report.apMod3)


def test_classify_rejects_bad_primes(f28, classes):
    with pytest.raises(RamifiedPrimeError):
        classify_frobenius(3, f28, classes)
    with pytest.raises(CompositeModulusError):
        classify_frobenius(35, f28, classes)


def test_crosscheck_small_prime_table(f28, classes, small_table):
    for row in small_table:
        result = crosscheck_table(row, f28, classes)
        if row.ambiguous:
            assert row.p in AMBIGUOUS
            assert len(result.report.candidates) >= 2
        else:
            assert result.passed, (row.p, result.problems)
            assert result.signAgrees
            assert result.printedInCandidates


def test_crosscheck_detects_a_wrong_sign(f28, classes, small_table):
    row = table_row(small_table, 7)
    flipped = TableRow(row.p, row.ap, -row.sign, row.matrix)
    result = crosscheck_table(flipped, f28, classes)
    assert not result.signAgrees
    assert not result


def test_crosscheck_rejects_non_unitary_matrix(f28, classes):
    row = TableRow(7, HeckeEigenvalue(1, 4), 1, (1, 1, 0, 0, 1, 0, 0, 0, 1))
    with pytest.raises(InconsistentDataError):
        crosscheck_table(row, f28, classes)


def test_missing_table_row(small_table):
    with pytest.raises(BadInputError):
        table_row(small_table, 71)


def test_f28_field_data(f28, classes):
    report = verify_f28(f28, classes, sweepPrimes=100, bound=500)
    assert report.ok
    assert report.realRoots == 4
    assert report.signature == (4, 12)
    assert report.discSign == 1
    assert report.twoExponent >= 76 and report.threeExponent >= 48
    assert report.witnessPrimes


def test_f28_sweep_only_sees_class_cycle_types(f28, classes):
    swept, skipped, observed, unexplained = cycle_type_sweep(f28, classes, 30)
    assert len(swept) == 30
    assert unexplained == {}
    assert 2 not in swept and 3 not in swept
