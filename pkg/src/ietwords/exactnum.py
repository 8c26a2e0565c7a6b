"""Exact arithmetic over a single real quadratic field Q(sqrt(d)).

A scalar is stored in the canonical form (a + b*sqrt(d)) / q with integers
a, b, positive integer q and gcd(a, b, q) = 1.  All predicates, including
the total order, are decided by integer sign tests; no floating point ever
touches a decision path.

d = 0 and d = 1 are accepted as purely rational field markers (the radical
part is folded away at construction).  Scalars from different field
contexts never mix: arithmetic and ordering between them raise
FieldMismatch even when both happen to be rational.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class ZeroDenominator(ValueError):
    """A scalar was built with a zero denominator."""


class NonSquarefreeRadicand(ValueError):
    """The radicand d is negative or has a square factor."""


class FieldMismatch(ValueError):
    """Two scalars from different field contexts were combined."""


class OutOfExpectedRange(ValueError):
    """mod1 was fed a value outside [-1, 2)."""


class ParseError(ValueError):
    """Scalar text did not match the grammar.

    `position` is the 0-based offset of the first offending character.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


# Comparison verdicts, aligned with the sign of the difference.
LT, EQ, GT = -1, 0, 1


def _sign_of(a, b, d):
    """Sign of a + b*sqrt(d) for integers a, b; decided without radicals."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: |a| vs |b|*sqrt(d) decided by squaring
    lhs = a * a
    rhs = b * b * d
    if a > 0:  # b < 0
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


def is_squarefree(d):
    """True for d >= 0 with no square factor; 0 and 1 count as rational markers."""
    if d < 0:
        return False
    if d <= 1:
        return True
    if d % 4 == 0:
        return False
    p = 3
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 2
    return True


class ExactScalar:
    """An element a + b*sqrt(d) of Q(sqrt(d)), immutable and totally ordered.

    The component fields a_num/a_den/b_num/b_den are exposed as derived
    properties; internally the value is kept over one common denominator,
    which keeps translation orbits cheap.
    """

    __slots__ = ("_a", "_b", "_q", "_d")

    def __init__(self, a, b, q, d, _canonical=False):
        if not _canonical:
            if q == 0:
                raise ZeroDenominator("denominator is zero")
            if not is_squarefree(d):
                raise NonSquarefreeRadicand(f"radicand {d} is not squarefree")
            if q < 0:
                a, b, q = -a, -b, -q
            if d == 0:
                b = 0
            elif d == 1:
                a, b = a + b, 0
            g = gcd(gcd(abs(a), abs(b)), q)
            if g > 1:
                a //= g
                b //= g
                q //= g
        self._a = a
        self._b = b
        self._q = q
        self._d = d

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_rational(cls, value, d=0):
        """Lift an int or Fraction into the field context d (radical part 0)."""
        f = Fraction(value)
        return cls(f.numerator, 0, f.denominator, d)

    @classmethod
    def from_parts(cls, a, b, d):
        """Build from rational parts a and b of a + b*sqrt(d)."""
        a = Fraction(a)
        b = Fraction(b)
        q = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        return cls(
            a.numerator * (q // a.denominator),
            b.numerator * (q // b.denominator),
            q,
            d,
        )

    @classmethod
    def zero(cls, d=0):
        return cls(0, 0, 1, d)

    @classmethod
    def one(cls, d=0):
        return cls(1, 0, 1, d)

    # -- canonical fields -------------------------------------------------

    @property
    def d(self):
        return self._d

    @property
    def rational_part(self):
        return Fraction(self._a, self._q)

    @property
    def radical_part(self):
        return Fraction(self._b, self._q)

    @property
    def a_num(self):
        return self.rational_part.numerator

    @property
    def a_den(self):
        return self.rational_part.denominator

    @property
    def b_num(self):
        return self.radical_part.numerator

    @property
    def b_den(self):
        return self.radical_part.denominator

    def is_rational(self):
        return self._b == 0

    def as_field(self, d):
        """Recontext a rational scalar into field d; identity when d matches."""
        if d == self._d:
            return self
        if self._b != 0:
            raise FieldMismatch(
                f"cannot move sqrt({self._d}) value into field sqrt({d})"
            )
        return ExactScalar(self._a, 0, self._q, d)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            if other._d != self._d:
                raise FieldMismatch(
                    f"field contexts differ: sqrt({self._d}) vs sqrt({other._d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar.from_rational(other, self._d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(
            self._a * o._q + o._a * self._q,
            self._b * o._q + o._b * self._q,
            self._q * o._q,
            self._d,
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(
            self._a * o._q - o._a * self._q,
            self._b * o._q - o._b * self._q,
            self._q * o._q,
            self._d,
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(
            self._a * o._a + self._b * o._b * self._d,
            self._a * o._b + self._b * o._a,
            self._q * o._q,
            self._d,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return ExactScalar(-self._a, -self._b, self._q, self._d, _canonical=True)

    # -- ordering ---------------------------------------------------------

    def sign(self):
        """Sign of the value, decided with integer arithmetic only."""
        return _sign_of(self._a, self._b, self._d)

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare ExactScalar with {type(other)!r}")
        return _sign_of(
            self._a * o._q - o._a * self._q,
            self._b * o._q - o._b * self._q,
            self._d,
        )

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            if self._d == other._d:
                return (
                    self._a == other._a
                    and self._b == other._b
                    and self._q == other._q
                )
            # across contexts only rational values can coincide
            return (
                self._b == 0
                and other._b == 0
                and self._a * other._q == other._a * self._q
            )
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._q) == other
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._q))
        return hash((self._a, self._b, self._q, self._d))

    # -- misc ---------------------------------------------------------------

    def approx(self):
        """Float approximation for display only, never for predicates."""
        from math import sqrt

        return self._a / self._q + (self._b / self._q) * sqrt(self._d)

    def __repr__(self):
        return f"ExactScalar({format_scalar(self)!r}, d={self._d})"

    def __str__(self):
        return format_scalar(self)


# -- spec operation surface ------------------------------------------------


def make_scalar(a_num, a_den, b_num, b_den, d):
    """Canonical scalar a_num/a_den + (b_num/b_den)*sqrt(d)."""
    if a_den == 0 or b_den == 0:
        raise ZeroDenominator("denominator is zero")
    if a_den < 0:
        a_num, a_den = -a_num, -a_den
    if b_den < 0:
        b_num, b_den = -b_num, -b_den
    q = a_den * b_den // gcd(a_den, b_den)
    return ExactScalar(a_num * (q // a_den), b_num * (q // b_den), q, d)


def cmp(x, y):
    """LT, EQ or GT by real value; requires a shared field context."""
    return x._cmp(y)


def add(x, y):
    return x + y


def sub(x, y):
    return x - y


def mul(x, y):
    return x * y


def neg(x):
    return -x


def mod1(x):
    """Reduce a one-translation-step value from [-1, 2) into [0, 1)."""
    one = ExactScalar.one(x.d)
    if x < -1 or x >= 2:
        raise OutOfExpectedRange(f"{x} outside [-1, 2)")
    if x.sign() < 0:
        return x + one
    if x >= one:
        return x - one
    return x


# -- text form ---------------------------------------------------------------
#
# scalar := rat | rat ("+"|"-") rat "*sqrt(" uint ")"
# rat    := ["-"] uint [ "/" uint ]


def _parse_uint(text, pos):
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ParseError("expected a digit", start)
    return int(text[start:pos]), pos


def _parse_rat(text, pos):
    sign = 1
    if pos < len(text) and text[pos] == "-":
        sign = -1
        pos += 1
    num, pos = _parse_uint(text, pos)
    den = 1
    if pos < len(text) and text[pos] == "/":
        den, pos = _parse_uint(text, pos + 1)
        if den == 0:
            raise ZeroDenominator(f"zero denominator at position {pos}")
    return sign * num, den, pos


def parse_scalar(text, d=None):
    """Parse the scalar grammar; round-trips with format_scalar.

    With `d` given, a bare rational is lifted into that field context and a
    radical with a different radicand raises FieldMismatch.
    """
    s = text.strip()
    a_num, a_den, pos = _parse_rat(s, 0)
    b_num, b_den, radicand = 0, 1, 0
    if pos < len(s) and s[pos] in "+-":
        op = s[pos]
        b_num, b_den, pos = _parse_rat(s, pos + 1)
        if op == "-":
            b_num = -b_num
        if not s.startswith("*sqrt(", pos):
            raise ParseError("expected '*sqrt('", pos)
        pos += len("*sqrt(")
        radicand, pos = _parse_uint(s, pos)
        if not s.startswith(")", pos):
            raise ParseError("expected ')'", pos)
        pos += 1
    if pos != len(s):
        raise ParseError("trailing characters", pos)
    value = make_scalar(a_num, a_den, b_num, b_den, radicand)
    if d is not None:
        if value.is_rational():
            return value.as_field(d)
        if value.d != d:
            raise FieldMismatch(
                f"scalar {text!r} lives in sqrt({value.d}), instance uses sqrt({d})"
            )
    return value


def _format_rat(f):
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_scalar(x):
    """Canonical text form; parse_scalar(format_scalar(x)) == x."""
    a = x.rational_part
    b = x.radical_part
    if b == 0:
        return _format_rat(a)
    sign = "+" if b > 0 else "-"
    return f"{_format_rat(a)}{sign}{_format_rat(abs(b))}*sqrt({x.d})"
