# Rendering of reports as text (jinja2 templates), csv or json-lines.

import csv
import io
import json
import os

import jinja2

from lib.Devissage.Errors import BadInputError

FORMATS = ("text", "csv", "json-lines")

FROBENIUS_FIELDS = ["p", "sign", "cycle_type", "classes", "traces", "ap_mod3", "millis"]
CHECK_FIELDS = ["module", "name", "status", "expected", "observed", "millis", "detail"]

_templateEnv = None


def template_env():
    # Define jinja2 template environment
    global _templateEnv
    if _templateEnv is None:
        templateLoader = jinja2.FileSystemLoader(
            searchpath=[os.path.join(os.path.dirname(__file__), "templates")]
        )
        _templateEnv = jinja2.Environment(
            loader=templateLoader,
            autoescape=False,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
    return _templateEnv


def render_template(name, **values):
    return template_env().get_template(name).render(**values)


def _check_format(fmt):
    if fmt not in FORMATS:
        raise BadInputError("unknown format %r, expected one of %s" % (fmt, ", ".join(FORMATS)))


def _frobenius_row(report, timings):
    data = report.asDict()
    if not timings:
        data["millis"] = ""
    return data


def _csv(rows, fields, header=True):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if header:
        writer.writerow(fields)
    for row in rows:
        values = (row[f] for f in fields)
        writer.writerow([" ".join(str(x) for x in v) if isinstance(v, list) else v for v in values])
    return out.getvalue()


def _json_lines(rows, fields):
    return "".join(json.dumps({f: row[f] for f in fields}, ensure_ascii=False) + "\n" for row in rows)


def render_frobenius_reports(reports, fmt="text", timings=True):
    _check_format(fmt)
    rows = [_frobenius_row(r, timings) for r in reports]
    if fmt == "csv":
        return _csv(rows, FROBENIUS_FIELDS)
    if fmt == "json-lines":
        return _json_lines(rows, FROBENIUS_FIELDS)
    return render_template("frobenius.txt.j2", reports=rows, timings=timings)


def render_frobenius_report(report, fmt="text", timings=True):
    return render_frobenius_reports([report], fmt, timings)


def render_verification_report(report, fmt="text", timings=True):
    _check_format(fmt)
    rows = [c.asDict() for c in report.checks]
    if not timings:
        for row in rows:
            row["millis"] = ""
    if fmt == "csv":
        return _csv(rows, CHECK_FIELDS)
    if fmt == "json-lines":
        return _json_lines(rows, CHECK_FIELDS)
    return render_template(
        "verify.txt.j2",
        checks=rows,
        selection=report.selection,
        passed=report.count("pass"),
        failed=report.count("fail"),
        skipped=report.count("skip"),
        timings=timings,
    )


def render_rows(template, rows, fields, fmt="text", **values):
    # Generic tables: invariants, kodaira, genus, group data
    _check_format(fmt)
    if fmt == "csv":
        return _csv(rows, fields)
    if fmt == "json-lines":
        return _json_lines(rows, fields)
    return render_template(template, rows=rows, **values)
