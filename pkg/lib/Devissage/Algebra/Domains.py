# Coefficient domains for UniPoly.
#
# A domain knows how to convert plain Python numbers into its elements and
# how to divide exactly. Elements themselves are ordinary Python objects
# (int, Fraction, FFElem, UniPoly) supporting + - * and ==.

from fractions import Fraction

from lib.Devissage.Errors import InexactDivisionError


class IntegerRing:

    name = "ZZ"
    isField = False
    characteristic = 0
    zero = 0
    one = 1

    def convert(self, value):
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        raise TypeError("cannot convert %r into ZZ" % (value,))

    def isZero(self, value):
        return value == 0

    def exquo(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError("%d does not divide %d" % (b, a))
        return q

    def format(self, value):
        return str(value)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class RationalField:

    name = "QQ"
    isField = True
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, value):
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError("cannot convert %r into QQ" % (value,))

    def isZero(self, value):
        return value == 0

    def exquo(self, a, b):
        return a / b

    def inverse(self, a):
        return 1 / a

    def format(self, value):
        if value.denominator == 1:
            return str(value.numerator)
        return "%d/%d" % (value.numerator, value.denominator)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


ZZ = IntegerRing()
QQ = RationalField()
