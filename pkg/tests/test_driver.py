import json
import os.path

import pytest

from lib.Devissage import Driver, Fixtures
from lib.Devissage.Errors import BadInputError, FixtureError

from conftest import DATA


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(
        """
        {
            // test configuration
            "config": {
                "debugLevel": 0,
                "dataPath": "%s",
                "settingsPath": "%s",
                "threads": 2,
                "bigPrimes": false
            },
            "logging": {"Console": {"enabled": false}}
        }
        """
        % (DATA, tmp_path)
    )
    return str(path)


@pytest.fixture
def run(config_file, capsys):
    def runner(*argv):
        code = Driver.main(["--config", config_file] + list(argv))
        return code, capsys.readouterr().out

    return runner


@pytest.mark.parametrize(
    "token, value",
    [("29", 29), ("10^1000+453", 10 ** 1000 + 453), ("2^31-1", 2 ** 31 - 1), (" 7 ", 7)],
)
def test_parse_integer(token, value):
    assert Driver.parse_integer(token) == value


def test_parse_integer_rejects_garbage():
    with pytest.raises(BadInputError):
        Driver.parse_integer("ten")


def test_parse_generators():
    assert Driver.parse_generators("1,0,2;1,2,0") == [(1, 0, 2), (1, 2, 0)]
    with pytest.raises(BadInputError):
        Driver.parse_generators("1,x")


def test_load_config_merges_sections(config_file):
    config = Driver.load_config(config_file)
    assert config["config"]["debugLevel"] == 0
    assert config["config"]["f28SweepPrimes"] == 100
    assert config["logging"]["Console"]["enabled"] is False


def test_missing_config_file(tmp_path, capsys):
    with pytest.raises(FixtureError):
        Driver.load_config(str(tmp_path / "nope.json"))
    assert Driver.main(["--config", str(tmp_path / "nope.json"), "genus", "--ell", "3"]) == 2


def test_verify_sections_follow_module_order():
    assert Driver.verify_sections() == [
        "ModelChecks",
        "FibrationChecks",
        "KodairaChecks",
        "GenusChecks",
        "GroupChecks",
        "F28Checks",
        "FrobeniusChecks",
        "DokChecks",
        "PropertyChecks",
    ]


def test_dok_xp(run):
    assert run("dok", "xp", "--p", "31") == (0, "x_31 = 6\n")
    assert run("dok", "xp", "--f", "1 0 1", "--h", "0 1", "--p", "7") == (0, "x_7 = 2\n")


def test_dok_classify_toy(run):
    assert run("dok", "classify", "--p", "31") == (0, "p=31 classes={1A}\n")
    assert run("dok", "classify", "--p", "7") == (0, "p=7 classes={3A}\n")


def test_dok_roots(run):
    code, out = run("dok", "roots", "--f", "-2 0 0 0 1")
    assert code == 0
    lines = out.splitlines()
    assert [line.split(" = ")[0] for line in lines] == ["r_0", "r_1", "r_2", "r_3"]
    assert lines[0].startswith("r_0 = -1.189207115")
    assert lines[3].startswith("r_3 = 1.189207115")


def test_dok_build_matches_fixture(run, tmp_path):
    output = str(tmp_path / "toy.txt")
    code, _ = run("dok", "build", "--output", output)
    assert code == 0
    built = Fixtures.load_resolvents(output)
    shipped = Fixtures.load_resolvents(os.path.join(DATA, Fixtures.RESOLVENT_TOY))
    assert built.resolvents == shipped.resolvents


@pytest.mark.parametrize(
    "argv",
    [
        ["dok", "classify"],
        ["dok", "xp", "--p", "9"],
        ["dok", "xp", "--f", "2 x", "--p", "7"],
        ["dok", "classify", "--p", "31", "--resolvents", "/nonexistent/toy.txt"],
        ["frobenius", "--p", "4"],
        ["frobenius", "--p", "3"],
        ["frobenius", "--batch", "/nonexistent/primes.txt"],
        ["verify", "nosuchsection"],
        ["--format", "xml", "genus", "--ell", "3"],
        ["genus"],
        ["model", "build", "--ell", "4"],
    ],
)
def test_bad_input_exits_2(run, argv):
    code, _ = run(*argv)
    assert code == 2


def test_genus(run):
    code, out = run("genus", "--ell", "3")
    assert code == 0
    assert "genus = 7 (closed form 7, agrees)" in out


def test_kodaira_json_lines(run):
    code, out = run("--format", "json-lines", "fibration", "kodaira")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert {row["type"] for row in rows} == {"I2*", "I4", "I0*"}


@pytest.mark.slow
def test_verify_genus_section(run, tmp_path):
    code, out = run("--no-timings", "verify", "genus")
    assert code == 0
    assert out.splitlines()[-1] == "verify genus: 5 passed, 0 failed, 0 skipped"
    with open(tmp_path / "settings.json") as f:
        assert json.load(f)["lastVerification"]["checks"]["genus l=3"] == "pass"


@pytest.mark.slow
def test_frobenius_batch(run, tmp_path):
    batch = tmp_path / "primes.txt"
    batch.write_text("29 -9 -12\n43 -7 30\n# a comment\n61\n")
    code, out = run("--no-timings", "--format", "csv", "frobenius", "--batch", str(batch))
    assert code == 0
    lines = out.splitlines()
    assert [line.split(",")[0] for line in lines[1:]] == ["29", "43", "61"]


@pytest.mark.slow
def test_frobenius_strict(run):
    assert run("frobenius", "--p", "31", "--strict")[0] == 3
    assert run("frobenius", "--p", "31")[0] == 0


@pytest.mark.slow
def test_frobenius_output_is_independent_of_threads(run):
    outputs = {
        threads: run("--threads", threads, "--no-timings", "frobenius", "--batch", os.path.join(DATA, Fixtures.AP_TABLE))[1]
        for threads in ("1", "4")
    }
    assert outputs["1"] == outputs["4"]
