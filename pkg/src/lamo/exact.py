"""Exact arithmetic on rationals and single-radicand quadratic irrationals.

A value denotes the real (a + b*sqrt(d)) / c with arbitrary-precision
integers, normalized so that c >= 1, gcd(a, b, c) = 1, and d = 0 whenever
the value is rational.  Two irrational values combine only when they share
the same radicand; mixing distinct non-square radicands raises
IncompatibleRadicands rather than approximating.  Every comparison, sign
and floor is decided by integer arithmetic alone; no floating point is
consulted anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .errors import IncompatibleRadicands, ParseError, ZeroDenominator

Coercible = Union[int, Fraction, "ExactNumber"]

# Trial-division bound for pulling square factors out of the radicand.
# Extraction is opportunistic: correctness never depends on d being
# squarefree, only on it being non-square, which is checked exactly.
_SQUARE_TRIAL_BOUND = 10_000


def checked_isqrt(v: int) -> int:
    """floor(sqrt(v)) for v >= 0, with the defining postcondition re-verified."""
    if v < 0:
        raise ValueError("isqrt of negative integer")
    s = math.isqrt(v)
    if not (s * s <= v < (s + 1) * (s + 1)):  # pragma: no cover
        raise AssertionError(f"isqrt postcondition violated for {v}")
    return s


def _pull_square_factors(d: int) -> tuple[int, int]:
    """Return (m, d') with d == m*m*d', extracting small square divisors."""
    m = 1
    p = 2
    while p * p <= d and p <= _SQUARE_TRIAL_BOUND:
        while d % (p * p) == 0:
            d //= p * p
            m *= p
        p += 1 if p == 2 else 2
    return m, d


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


_INT_RE = re.compile(r"([+-]?\d+)")
_RAT_RE = re.compile(r"([+-]?\d+)/([+-]?\d+)")
_RAD_RE = re.compile(r"([+-]?)(?:(\d+)\*)?sqrt\((\d+)\)(?:/([+-]?\d+))?")
_FULL_RE = re.compile(r"\(([+-]?\d+)([+-])(?:(\d+)\*)?sqrt\((\d+)\)\)(?:/([+-]?\d+))?")
_BARE_FULL_RE = re.compile(r"([+-]?\d+)([+-])(?:(\d+)\*)?sqrt\((\d+)\)")


@total_ordering
class ExactNumber:
    """An exact real of the form (a + b*sqrt(d)) / c."""

    __slots__ = ("_a", "_b", "_c", "_d")

    def __init__(self, a: int, b: int = 0, d: int = 0, c: int = 1) -> None:
        for name, v in (("a", a), ("b", b), ("d", d), ("c", c)):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"field {name} must be an int, got {v!r}")
        if c == 0:
            raise ZeroDenominator("denominator c must be non-zero")
        if d < 0:
            raise ValueError("radicand d must be non-negative")
        if c < 0:
            a, b, c = -a, -b, -c
        if b == 0:
            d = 0
        elif d == 0:
            b = 0
        else:
            r = checked_isqrt(d)
            if r * r == d:
                a, b, d = a + b * r, 0, 0
            else:
                m, d = _pull_square_factors(d)
                b *= m
        g = math.gcd(math.gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        self._a = a
        self._b = b
        self._c = c
        self._d = d

    # -- field access ---------------------------------------------------

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def c(self) -> int:
        return self._c

    @property
    def d(self) -> int:
        return self._d

    # -- constructors ---------------------------------------------------

    @classmethod
    def rational(cls, p: int, r: int = 1) -> ExactNumber:
        if r == 0:
            raise ZeroDenominator("rational with denominator zero")
        return cls(p, 0, 0, r)

    @classmethod
    def from_fraction(cls, q: Fraction) -> ExactNumber:
        return cls(q.numerator, 0, 0, q.denominator)

    @classmethod
    def sqrt(cls, d: int) -> ExactNumber:
        return cls(0, 1, d, 1)

    @staticmethod
    def _coerce(x: Coercible) -> ExactNumber | None:
        if isinstance(x, ExactNumber):
            return x
        if isinstance(x, bool):
            return None
        if isinstance(x, int):
            return ExactNumber(x)
        if isinstance(x, Fraction):
            return ExactNumber(x.numerator, 0, 0, x.denominator)
        return None

    # -- predicates -----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    @property
    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_integer(self) -> bool:
        """True iff the denoted real is an integer."""
        return self._b == 0 and self._a % self._c == 0

    def as_fraction(self) -> Fraction:
        if self._b != 0:
            raise ValueError(f"{self} is irrational")
        return Fraction(self._a, self._c)

    # -- ordering -------------------------------------------------------

    def _numerator_sign(self) -> int:
        # Sign of a + b*sqrt(d); c > 0 never changes it.
        a, b, d = self._a, self._b, self._d
        if b == 0:
            return _sign(a)
        if a == 0:
            return _sign(b)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Opposite signs: compare a*a against b*b*d after isolating the radical.
        k = a * a - b * b * d
        return _sign(k) if a > 0 else -_sign(k)

    def sign(self) -> int:
        return self._numerator_sign()

    def compare(self, other: Coercible) -> int:
        """Exact three-way comparison: -1, 0 or 1."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare ExactNumber with {other!r}")
        return (self - o).sign()

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)  # type: ignore[arg-type]
        if o is None:
            return NotImplemented
        if self._b != 0 and o._b != 0 and self._d != o._d:
            # Distinct non-square radicands never denote the same real.
            return False
        return self.compare(o) == 0

    def __lt__(self, other: Coercible) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.compare(o) < 0

    def __hash__(self) -> int:
        return hash((self._a, self._b, self._c, self._d))

    # -- arithmetic -----------------------------------------------------

    def _merged_radicand(self, other: ExactNumber) -> int:
        if self._b != 0 and other._b != 0 and self._d != other._d:
            raise IncompatibleRadicands(
                f"cannot combine sqrt({self._d}) with sqrt({other._d})"
            )
        return self._d if self._b != 0 else other._d

    def __add__(self, other: Coercible) -> ExactNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._merged_radicand(o)
        return ExactNumber(
            self._a * o._c + o._a * self._c,
            self._b * o._c + o._b * self._c,
            d,
            self._c * o._c,
        )

    def __radd__(self, other: Coercible) -> ExactNumber:
        return self.__add__(other)

    def __neg__(self) -> ExactNumber:
        return ExactNumber(-self._a, -self._b, self._d, self._c)

    def __sub__(self, other: Coercible) -> ExactNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__add__(-o)

    def __rsub__(self, other: Coercible) -> ExactNumber:
        return (-self).__add__(other)

    def __mul__(self, other: Coercible) -> ExactNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._merged_radicand(o)
        return ExactNumber(
            self._a * o._a + self._b * o._b * d,
            self._a * o._b + self._b * o._a,
            d,
            self._c * o._c,
        )

    def __rmul__(self, other: Coercible) -> ExactNumber:
        return self.__mul__(other)

    def reciprocal(self) -> ExactNumber:
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        # 1 / ((a + b*sqrt(d))/c) = c*(a - b*sqrt(d)) / (a*a - b*b*d); the
        # conjugate norm is non-zero because d is non-square whenever b != 0.
        norm = self._a * self._a - self._b * self._b * self._d
        return ExactNumber(self._c * self._a, -self._c * self._b, self._d, norm)

    def __truediv__(self, other: Coercible) -> ExactNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__mul__(o.reciprocal())

    def __rtruediv__(self, other: Coercible) -> ExactNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__mul__(self.reciprocal())

    def __abs__(self) -> ExactNumber:
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- floor ----------------------------------------------------------

    def floor(self) -> int:
        """The unique integer n with n <= x < n+1, decided exactly."""
        a, b, c, d = self._a, self._b, self._c, self._d
        if b == 0:
            return a // c
        s = checked_isqrt(b * b * d)
        # b*sqrt(d) lies strictly between s and s+1 (resp. -(s+1) and -s):
        # b != 0 forces d non-square, so b*sqrt(d) is irrational.
        n = (a + s) // c if b > 0 else (a - s - 1) // c
        # Exact verification; each loop runs at most once.
        while self.compare(n) < 0:
            n -= 1
        while self.compare(n + 1) >= 0:
            n += 1
        return n

    # -- text form --------------------------------------------------------

    def literal(self) -> str:
        """Canonical literal, parseable by :meth:`parse`."""
        a, b, c, d = self._a, self._b, self._c, self._d
        if b == 0:
            return str(a) if c == 1 else f"{a}/{c}"
        if a == 0:
            if b == 1:
                head = f"sqrt({d})"
            elif b == -1:
                head = f"-sqrt({d})"
            else:
                head = f"{b}*sqrt({d})"
            return head if c == 1 else f"{head}/{c}"
        sign = "+" if b > 0 else "-"
        body = f"({a}{sign}{abs(b)}*sqrt({d}))"
        return body if c == 1 else f"{body}/{c}"

    @classmethod
    def parse(cls, text: str) -> ExactNumber:
        """Parse a literal such as ``7``, ``3/2``, ``sqrt(5)`` or
        ``(-1+1*sqrt(5))/2``.  Decimal literals are rejected."""
        s = text.strip().replace("−", "-").replace(" ", "")
        if not s:
            raise ParseError("empty numeric literal")
        if "." in s:
            raise ParseError(f"decimal literals are not accepted: {text!r}")
        if _INT_RE.fullmatch(s):
            return cls(int(s))
        m = _RAT_RE.fullmatch(s)
        if m:
            return cls.rational(int(m.group(1)), int(m.group(2)))
        m = _RAD_RE.fullmatch(s)
        if m:
            sgn, coef, rad, den = m.groups()
            b = (-1 if sgn == "-" else 1) * (int(coef) if coef else 1)
            return cls(0, b, int(rad), int(den) if den else 1)
        m = _FULL_RE.fullmatch(s) or _BARE_FULL_RE.fullmatch(s)
        if m:
            groups = m.groups()
            a, sgn, coef, rad = groups[0], groups[1], groups[2], groups[3]
            den = groups[4] if len(groups) > 4 else None
            b = (-1 if sgn == "-" else 1) * (int(coef) if coef else 1)
            return cls(int(a), b, int(rad), int(den) if den else 1)
        raise ParseError(f"cannot parse exact literal: {text!r}")

    def __str__(self) -> str:
        return self.literal()

    def __repr__(self) -> str:
        return f"ExactNumber({self._a}, {self._b}, {self._d}, {self._c})"


ZERO = ExactNumber(0)
ONE = ExactNumber(1)


# Functional surface mirroring the operator forms above.

def add(x: ExactNumber, y: Coercible) -> ExactNumber:
    return x + y


def mul_rational(x: ExactNumber, p: int, r: int) -> ExactNumber:
    if r == 0:
        raise ZeroDenominator("rational multiplier with denominator zero")
    return x * Fraction(p, r)


def compare(x: ExactNumber, y: Coercible) -> int:
    return x.compare(y)


def floor(x: ExactNumber) -> int:
    return x.floor()


def is_integer(x: ExactNumber) -> bool:
    return x.is_integer()
