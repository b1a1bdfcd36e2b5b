"""Exact scalars in a real quadratic extension Q(sqrt(d)).

A scalar is a + b*sqrt(d) with a, b rational and d a fixed square-free
non-negative integer (d = 0 means plain Q).  Values are immutable and
normalized on construction, so equality is structural.  Only one extension
may appear in a computation: combining sqrt(2)- and sqrt(3)-values raises
FieldMismatchError.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FieldMismatchError, InvalidFieldError, ParseError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _is_square_free(d: int) -> bool:
    if d < 0:
        return False
    for p in _SMALL_PRIMES:
        if p * p > d:
            break
        if d % (p * p) == 0:
            return False
    # d < 2209 is fully covered by the list above; larger tags are rejected
    # elsewhere, this routine only ever sees small d in practice.
    k = _SMALL_PRIMES[-1] + 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 2
    return True


def validate_field_tag(d: int) -> int:
    d = int(d)
    if d in (0, 1):
        return 0
    if not _is_square_free(d):
        raise InvalidFieldError(f"field tag {d} is not square-free")
    return d


class Scalar:
    """Immutable element of Q(sqrt(d))."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if b == 0:
            d = 0
        elif d == 0:
            b = Fraction(0)
        else:
            d = validate_field_tag(d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    # -- helpers -------------------------------------------------------

    @staticmethod
    def of(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot coerce {value!r} to Scalar")

    @staticmethod
    def sqrt(d: int) -> "Scalar":
        return Scalar(0, 1, d)

    def _join(self, other: "Scalar") -> int:
        if self.d and other.d and self.d != other.d:
            raise FieldMismatchError(
                f"cannot mix sqrt({self.d}) and sqrt({other.d})"
            )
        return self.d or other.d

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b != 0:
            raise FieldMismatchError(f"{self} is not rational")
        return self.a

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other)
        return None

    def __add__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        d = self._join(other)
        return Scalar(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        d = self._join(other)
        return Scalar(
            self.a * other.a + d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("scalar inverse of zero")
        # (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - d b^2); the norm is
        # nonzero because sqrt(d) is irrational for square-free d > 1.
        norm = self.a * self.a - self.d * self.b * self.b
        return Scalar(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("scalar powers must be non-negative integers")
        out = Scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons ---------------------------------------------------

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    # -- formatting ----------------------------------------------------

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        rad = f"sqrt({self.d})" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt({self.d})"
        rad = ("-" if self.b < 0 else "") + rad
        if self.a == 0:
            return rad
        if self.b < 0:
            return f"{self.a}{rad}"
        return f"{self.a}+{rad}"

    def __repr__(self):
        return f"Scalar({self})"

    def latex(self) -> str:
        def frac(q: Fraction, radical: str = "") -> str:
            sign = "-" if q < 0 else ""
            q = abs(q)
            if q.denominator == 1:
                body = "" if (q == 1 and radical) else str(q.numerator)
            else:
                num = "" if (q.numerator == 1 and radical) else str(q.numerator)
                return f"{sign}\\frac{{{num or 1}}}{{{q.denominator}}}{radical}"
            return f"{sign}{body}{radical}"

        if self.b == 0:
            return frac(self.a)
        rad = frac(self.b, f"\\sqrt{{{self.d}}}")
        if self.a == 0:
            return rad
        return frac(self.a) + ("+" if self.b > 0 else "") + rad


ZERO = Scalar(0)
ONE = Scalar(1)

_TERM_RE = re.compile(
    r"""^
    (?:(?P<coef>-?\d+(?:/\d+)?)\*?)?          # optional rational factor
    (?:sqrt\((?P<d>\d+)\))?                   # optional radical
    $""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> Scalar:
    """Parse "p/q", "p/q+r/s*sqrt(d)" and friends (whitespace ignored)."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty scalar literal")
    # split into signed chunks
    chunks = []
    start = 0
    for i, ch in enumerate(s):
        if ch in "+-" and i > start and s[i - 1] not in "+-*/(":
            chunks.append(s[start:i])
            start = i
    chunks.append(s[start:])
    total = Scalar(0)
    for chunk in chunks:
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coef") is None and m.group("d") is None):
            raise ParseError(f"bad scalar term {chunk!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        coef *= sign
        if m.group("d") is not None:
            term = Scalar(0, coef, int(m.group("d")))
        else:
            term = Scalar(coef)
        total = total + term
    return total
