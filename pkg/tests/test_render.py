import csv
import io
import json

import pytest

from lib.Devissage.Errors import BadInputError
from lib.Devissage.Frobenius.Classify import FrobeniusReport
from lib.Devissage.Group.F9 import I, MINUS_I
from lib.Devissage.Render import Reports
from lib.Devissage.VerificationReport import FAIL, PASS, SKIP, CheckResult, VerificationReport


def sample_report(p=61):
    return FrobeniusReport(
        p=p,
        sign=1,
        cycleType=((1, 1), (3, 9)),
        candidates=("9A", "9B"),
        traces=(I,),
        apMod3=(I, MINUS_I),
        millis=12,
    )


def sample_checks():
    return VerificationReport(
        "genus",
        [
            CheckResult("genus l=3", "Genus", PASS, "7", "7", 3),
            CheckResult("genus l=5", "Genus", FAIL, "25", "24", 4, "off by one"),
            CheckResult("closed form", "Genus", SKIP, detail="disabled"),
        ],
    )


def test_frobenius_text():
    text = Reports.render_frobenius_report(sample_report())
    assert text.splitlines() == [
        "p=61",
        "sign=+1",
        "cycle_type=1 3^9",
        "classes={9A,9B}",
        "traces={i}",
        "ap_mod3={i,-i}",
        "millis=12",
    ]


def test_frobenius_text_without_timings():
    text = Reports.render_frobenius_reports([sample_report(7), sample_report(13)], timings=False)
    assert "millis" not in text
    assert text.split("\n\n")[1].startswith("p=13")


def test_frobenius_csv():
    text = Reports.render_frobenius_reports([sample_report()], "csv", timings=False)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == Reports.FROBENIUS_FIELDS
    assert rows[1] == ["61", "+1", "1 3^9", "9A 9B", "i", "i -i", ""]


def test_frobenius_json_lines():
    text = Reports.render_frobenius_reports([sample_report(7), sample_report(13)], "json-lines")
    lines = [json.loads(line) for line in text.splitlines()]
    assert [row["p"] for row in lines] == ["7", "13"]
    assert lines[0]["classes"] == ["9A", "9B"]
    assert lines[0]["millis"] == 12


def test_thousand_digit_prime_is_printed_in_full():
    p = 10 ** 1000 + 453
    text = Reports.render_frobenius_report(sample_report(p), "text")
    assert text.splitlines()[0] == "p=%d" % p


def test_verification_text():
    text = Reports.render_verification_report(sample_checks(), timings=False)
    lines = text.splitlines()
    assert lines[0].startswith("pass Genus")
    assert "expected: 25" in text and "observed: 24" in text
    assert "detail:   off by one" in text
    assert "ms)" not in text
    assert lines[-1] == "verify genus: 1 passed, 1 failed, 1 skipped"


def test_verification_json_lines():
    text = Reports.render_verification_report(sample_checks(), "json-lines")
    rows = [json.loads(line) for line in text.splitlines()]
    assert [r["status"] for r in rows] == [PASS, FAIL, SKIP]
    assert rows[1]["detail"] == "off by one"


def test_render_rows_csv():
    rows = [{"scalars": "1", "degrees": [224, 252, 252], "total": 728}]
    text = Reports.render_rows("orbits.txt.j2", rows, ["scalars", "degrees", "total"], "csv")
    assert text.splitlines()[1] == "1,224 252 252,728"


@pytest.mark.parametrize("fmt", ["xml", "", "TEXT"])
def test_unknown_format(fmt):
    with pytest.raises(BadInputError):
        Reports.render_frobenius_reports([sample_report()], fmt)
    with pytest.raises(BadInputError):
        Reports.render_rows("orbits.txt.j2", [], [], fmt)


def test_negative_sign():
    report = sample_report()
    report.sign = -1
    assert "sign=-1" in Reports.render_frobenius_report(report)
