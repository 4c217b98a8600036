# F9 = F3(i) with i^2 = -1, encoded as small integers a + 3b for a + b*i.
#
# The group computations multiply tens of thousands of 3x3 matrices, so the
# field operations are tabulated once from the generic extension field.

import re

from lib.Devissage.Algebra.FiniteField import ExtFieldCtx
from lib.Devissage.Errors import BadInputError

F9_CTX = ExtFieldCtx(3, 2, modulus=(1, 0, 1))

# elements() runs in toInt order, so list position equals the code
_ELEMENTS = list(F9_CTX.elements())

ZERO = 0
ONE = 1
MINUS_ONE = 2
I = 3
MINUS_I = 6
NONZERO = tuple(range(1, 9))

ADD = tuple(tuple((a + b).toInt() for b in _ELEMENTS) for a in _ELEMENTS)
MUL = tuple(tuple((a * b).toInt() for b in _ELEMENTS) for a in _ELEMENTS)
NEG = tuple((-a).toInt() for a in _ELEMENTS)
CONJ = tuple((a ** 3).toInt() for a in _ELEMENTS)
INV = (None,) + tuple((a ** -1).toInt() for a in _ELEMENTS[1:])
NORM = tuple(MUL[c][CONJ[c]] for c in range(9))

_TERM = re.compile(r"([+-]?)(\d*)(i?)")


def f9(re_part, im_part=0):
    return (re_part % 3) + 3 * (im_part % 3)


def to_elem(code):
    return _ELEMENTS[code]


def from_elem(x):
    if x.ctx != F9_CTX:
        raise BadInputError("%r is not an element of F9" % (x,))
    return x.toInt()


def sub(a, b):
    return ADD[a][NEG[b]]


def balanced(code):
    # (re, im) with entries in {-1, 0, 1}
    a, b = code % 3, code // 3
    return (a - 3 if a == 2 else a, b - 3 if b == 2 else b)


def format_f9(code):
    a, b = balanced(code)
    if b == 0:
        return str(a)
    text = "i" if b == 1 else "-i"
    if a == 0:
        return text
    return text + ("+1" if a == 1 else "-1")


def parse_gaussian(token):
    # "4i+1", "-10i-7", "i - 1", "7" -> (re, im) as integers
    text = token.replace(" ", "")
    if not text:
        raise BadInputError("empty Gaussian integer")
    real, imag = 0, 0
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) == "" and m.group(3) == ""):
            raise BadInputError("bad Gaussian integer %r" % token)
        sign = -1 if m.group(1) == "-" else 1
        value = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            imag += sign * value
        else:
            real += sign * value
        pos = m.end()
    return real, imag


def parse_f9(token):
    return f9(*parse_gaussian(token))


def conj(code):
    return CONJ[code]


def f3_value(code):
    # Elements of the prime field as an integer in {-1, 0, 1}
    a, b = balanced(code)
    if b:
        raise BadInputError("%s does not lie in F3" % format_f9(code))
    return a
