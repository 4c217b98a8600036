# Text format shared by every polynomial fixture:
#
#   unipoly <degree>             bipoly
#   <coeff>                      <e_x> <e_y> <coeff>
#   ...                          ...
#
# Coefficients are integers or num/den, univariate terms run from the
# constant upwards, '#' starts a comment.

from fractions import Fraction

from lib.Devissage.Algebra.BiPoly import BiPoly
from lib.Devissage.Algebra.Domains import QQ
from lib.Devissage.Algebra.UniPoly import UniPoly
from lib.Devissage.Errors import BadInputError


def parse_rational(token):
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(token))
    except (ValueError, ZeroDivisionError):
        raise BadInputError("bad rational coefficient %r" % token)


def format_rational(value):
    return QQ.format(Fraction(value))


def content_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_poly(text):
    lines = list(content_lines(text))
    if not lines:
        raise BadInputError("empty polynomial text")
    header = lines[0].split()
    if header[0] == "unipoly":
        if len(header) != 2:
            raise BadInputError("unipoly header needs a degree")
        degree = int(header[1])
        coeffs = []
        for line in lines[1:]:
            coeffs.extend(parse_rational(tok) for tok in line.split())
        if len(coeffs) != degree + 1:
            raise BadInputError(
                "unipoly %d expects %d coefficients, found %d" % (degree, degree + 1, len(coeffs))
            )
        poly = UniPoly(coeffs, QQ)
        if poly.degree != degree:
            raise BadInputError("leading coefficient of unipoly %d is zero" % degree)
        return poly
    if header[0] == "bipoly":
        terms = {}
        for line in lines[1:]:
            fields = line.split()
            if len(fields) != 3:
                raise BadInputError("bipoly term needs 'e_x e_y coeff': %r" % line)
            key = (int(fields[0]), int(fields[1]))
            if key in terms:
                raise BadInputError("duplicate bipoly term %r" % (key,))
            terms[key] = parse_rational(fields[2])
        return BiPoly(terms)
    raise BadInputError("unknown polynomial header %r" % lines[0])


def format_unipoly(poly, comment=None):
    out = []
    if comment:
        out.extend("# " + line for line in comment.splitlines())
    out.append("unipoly %d" % poly.degree)
    out.extend(format_rational(c) for c in poly.coeffs)
    return "\n".join(out) + "\n"


def format_bipoly(poly, comment=None):
    out = []
    if comment:
        out.extend("# " + line for line in comment.splitlines())
    out.append("bipoly")
    for (ex, ey), c in poly.sortedTerms():
        out.append("%d %d %s" % (ex, ey, format_rational(c)))
    return "\n".join(out) + "\n"


def format_poly(poly, comment=None):
    if isinstance(poly, BiPoly):
        return format_bipoly(poly, comment)
    return format_unipoly(poly, comment)


def parse_coefficient_list(text):
    # Inline form used by resolvent files: whitespace separated, constant first
    return UniPoly([parse_rational(tok) for tok in text.split()], QQ)


def format_coefficient_list(poly):
    return " ".join(format_rational(c) for c in poly.coeffs)
