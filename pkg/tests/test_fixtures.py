import pytest

from lib.Devissage import Fixtures
from lib.Devissage.Errors import BadInputError, FixtureError
from lib.Devissage.Frobenius.Hecke import HeckeEigenvalue
from lib.Devissage.Group.F9 import I, MINUS_I, ONE

ROW_7 = "7 1 4 +1 0 i+1 i-1 0 i+1 -i+1 1 0 0"


def test_parse_table_row():
    row = Fixtures.parse_table_row(ROW_7)
    assert row.p == 7
    assert row.ap == HeckeEigenvalue(1, 4)
    assert row.sign == 1
    assert row.matrix[6] == ONE
    assert not row.ambiguous
    assert Fixtures.format_table_row(row) == ROW_7


def test_parse_ambiguous_row():
    row = Fixtures.parse_table_row("31 1 0 ambiguous")
    assert row.ambiguous
    assert row.sign is None
    assert Fixtures.format_table_row(row) == "31 1 0 ambiguous"


def test_parse_row_with_huge_prime():
    p = 10 ** 1000 + 453
    row = Fixtures.parse_table_row("%d -1 0 +1 0 0 -i 0 -i 0 1 0 0" % p)
    assert row.p == p
    assert row.matrix[2] == MINUS_I and row.matrix[4] == MINUS_I
    assert I != MINUS_I


@pytest.mark.parametrize(
    "line",
    [
        "7 1 4",
        "7 one 4 +1 0 0 1 1 0 0 0 1 0",
        "31 1 0 ambiguous extra",
        "7 1 4 0 0 0 1 1 0 0 0 1 0",
        "7 1 4 +1 0 0 1 1 0 0 0 1",
    ],
)
def test_bad_table_rows(line):
    with pytest.raises(BadInputError):
        Fixtures.parse_table_row(line)


def test_load_table_errors(tmp_path):
    with pytest.raises(FixtureError) as e:
        Fixtures.load_table(str(tmp_path / "missing.txt"))
    assert "missing.txt" in str(e.value)

    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n")
    with pytest.raises(FixtureError):
        Fixtures.load_table(str(empty))

    bad = tmp_path / "bad.txt"
    bad.write_text(ROW_7 + "\n7 1\n")
    with pytest.raises(FixtureError):
        Fixtures.load_table(str(bad))


def test_load_f28_rejects_non_monic(tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("unipoly 2\n1\n0\n2\n")
    with pytest.raises(FixtureError):
        Fixtures.load_f28(str(path))
    path.write_text("bipoly\n0 0 1\n")
    with pytest.raises(FixtureError):
        Fixtures.load_f28(str(path))


def test_shipped_fixtures_load(data_path):
    f28 = Fixtures.load_f28(Fixtures.fixture_path(data_path, Fixtures.F28))
    assert f28.degree == 28 and f28.isMonic()
    table = Fixtures.load_table(Fixtures.fixture_path(data_path, Fixtures.AP_TABLE))
    assert [r.p for r in table if r.ambiguous] == [5, 31, 37, 53]
    big = Fixtures.load_table(Fixtures.fixture_path(data_path, Fixtures.BIG_PRIMES))
    assert len(big) == 20
    assert big[0].p == 10 ** 1000 + 453
    toy = Fixtures.load_resolvents(Fixtures.fixture_path(data_path, Fixtures.RESOLVENT_TOY))
    assert toy.labels == ["1A", "2A", "3A"]
