# Loading and writing the plain-text data files under config.dataPath.
#
# Every loader raises FixtureError carrying the offending path, which the
# Driver turns into exit code 2.

import os.path

from lib.Devissage.Algebra.BiPoly import BiPoly
from lib.Devissage.Algebra.PolyText import content_lines, parse_poly
from lib.Devissage.Errors import BadInputError, FixtureError
from lib.Devissage.Fibration.PlaneModel import PlaneModel
from lib.Devissage.Frobenius.Classify import TableRow
from lib.Devissage.Frobenius.Dokchitser import ResolventSet
from lib.Devissage.Frobenius.Hecke import HeckeEigenvalue
from lib.Devissage.Group.Classes import import_classes
from lib.Devissage.Group.F9 import format_f9, parse_f9

MODEL56 = "model56.txt"
F28 = "f28.txt"
AP_TABLE = "ap_table.txt"
BIG_PRIMES = "bigprimes.txt"
RESOLVENT_TOY = "resolvent_toy.txt"
CLASSES = "classes.txt"


def fixture_path(dataPath, name):
    return os.path.join(dataPath, name)


def read_fixture(path):
    try:
        with open(path, "r", encoding="utf-8") as infile:
            return infile.read()
    except FileNotFoundError:
        raise FixtureError(path, "missing fixture")
    except OSError as e:
        raise FixtureError(path, "unreadable fixture: %s" % e)


def write_fixture(path, text):
    with open(path, "w", encoding="utf-8") as outfile:
        outfile.write(text)


def load_model56(path, ell=3):
    try:
        poly = parse_poly(read_fixture(path))
    except BadInputError as e:
        raise FixtureError(path, str(e))
    if not isinstance(poly, BiPoly):
        raise FixtureError(path, "expected a bipoly")
    return PlaneModel(poly, ell)


def load_f28(path):
    try:
        poly = parse_poly(read_fixture(path))
    except BadInputError as e:
        raise FixtureError(path, str(e))
    if isinstance(poly, BiPoly) or poly.lc() != 1:
        raise FixtureError(path, "expected a monic univariate polynomial")
    return poly


def parse_table_row(line):
    fields = line.split()
    if len(fields) < 4:
        raise BadInputError("table row needs 'p re im' and a class: %r" % line)
    try:
        p, re_part, im_part = int(fields[0]), int(fields[1]), int(fields[2])
    except ValueError:
        raise BadInputError("bad table row %r" % line)
    ap = HeckeEigenvalue(re_part, im_part)
    if fields[3] == "ambiguous":
        if len(fields) != 4:
            raise BadInputError("ambiguous row carries extra fields: %r" % line)
        return TableRow(p, ap)
    if fields[3] not in ("+1", "-1") or len(fields) != 13:
        raise BadInputError("row needs a sign and 9 matrix entries: %r" % line)
    matrix = tuple(parse_f9(tok) for tok in fields[4:])
    return TableRow(p, ap, int(fields[3]), matrix)


def format_table_row(row):
    head = "%d %d %d" % (row.p, row.ap.re, row.ap.im)
    if row.ambiguous:
        return head + " ambiguous"
    return head + " %+d " % row.sign + " ".join(format_f9(x) for x in row.matrix)


def load_table(path):
    rows = []
    try:
        for line in content_lines(read_fixture(path)):
            rows.append(parse_table_row(line))
    except BadInputError as e:
        raise FixtureError(path, str(e))
    if not rows:
        raise FixtureError(path, "no table rows")
    return rows


def load_resolvents(path):
    try:
        return ResolventSet.parse(read_fixture(path))
    except BadInputError as e:
        raise FixtureError(path, str(e))


def load_classes(path):
    return import_classes(read_fixture(path), path)
