"""Exact arithmetic in quadratic fields Q(sqrt(m)).

QuadValue is the scalar a + b*sqrt(m) with rational a, b and a fixed square-free
radicand m >= 0.  Values with b = 0 are plain rationals and combine freely with
values over any radicand; two genuinely irrational values only combine when
their radicands agree.  Comparisons are decided exactly by sign analysis, never
through floating point.

QuadMatrix holds a square matrix of such values as a pair of integer matrices
plus one common denominator, so matrix products reduce to a few integer
matmuls.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

import numpy as np

from .errors import MixedRadicandsError

RationalLike = Union[int, Fraction]
_ZERO = Fraction(0)


def square_free_split(k: int) -> tuple[int, int]:
    """Return (s, m) with k = s*s*m and m square-free.  Requires k >= 0."""
    if k < 0:
        raise ValueError("radicand must be nonnegative")
    if k in (0, 1):
        return 1, k
    s, m, p = 1, k, 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            s *= p
        p += 1 if p == 2 else 2
    return s, m


@total_ordering
class QuadValue:
    """Exact number a + b*sqrt(m), m square-free and nonnegative."""

    __slots__ = ("a", "b", "m")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, m: int = 0):
        if not isinstance(a, Fraction):
            a = Fraction(a)
        if not isinstance(b, Fraction):
            b = Fraction(b)
        if b == 0:
            m = 0
        elif m == 0:
            b = _ZERO
        elif m == 1:
            a, b, m = a + b, _ZERO, 0
        else:
            s, m = square_free_split(m)
            if s != 1:
                b *= s
            if m == 1:
                a, b, m = a + b, _ZERO, 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("QuadValue is immutable")

    @classmethod
    def sqrt_int(cls, k: int) -> "QuadValue":
        """Exact square root of a nonnegative integer."""
        return cls(0, 1, k)

    # -- predicates ------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with m b^2
        diff = a * a - self.m * b * b
        if a > 0:  # b < 0
            return (diff > 0) - (diff < 0)
        return (diff < 0) - (diff > 0)

    def conjugate(self) -> "QuadValue":
        return QuadValue(self.a, -self.b, self.m)

    # -- arithmetic ------------------------------------------------------

    def _join(self, other) -> tuple["QuadValue", "QuadValue", int]:
        if not isinstance(other, QuadValue):
            if isinstance(other, (int, Fraction)):
                other = QuadValue(other)
            else:
                return NotImplemented, NotImplemented, -1
        if self.b != 0 and other.b != 0 and self.m != other.m:
            raise MixedRadicandsError(f"sqrt({self.m}) vs sqrt({other.m})")
        m = self.m if self.b != 0 else other.m
        return self, other, m

    def __add__(self, other):
        if isinstance(other, QuadValue) and self.m == other.m:
            return QuadValue(self.a + other.a, self.b + other.b, self.m)
        x, y, m = self._join(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadValue(x.a + y.a, x.b + y.b, m)

    __radd__ = __add__

    def __neg__(self):
        return QuadValue(-self.a, -self.b, self.m)

    def __sub__(self, other):
        if isinstance(other, QuadValue) and self.m == other.m:
            return QuadValue(self.a - other.a, self.b - other.b, self.m)
        x, y, m = self._join(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadValue(x.a - y.a, x.b - y.b, m)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuadValue) and self.m == other.m:
            if self.b == 0 and other.b == 0:
                return QuadValue(self.a * other.a)
            m = self.m
            return QuadValue(self.a * other.a + m * self.b * other.b,
                             self.a * other.b + self.b * other.a, m)
        x, y, m = self._join(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadValue(x.a * y.a + m * x.b * y.b, x.a * y.b + x.b * y.a, m)

    __rmul__ = __mul__

    def inverse(self) -> "QuadValue":
        if self.b == 0:
            if self.a == 0:
                raise ZeroDivisionError("QuadValue division by zero")
            return QuadValue(1 / self.a)
        norm = self.a * self.a - self.m * self.b * self.b  # never 0: sqrt(m) irrational
        return QuadValue(self.a / norm, -self.b / norm, self.m)

    def __truediv__(self, other):
        x, y, _ = self._join(other)
        if x is NotImplemented:
            return NotImplemented
        return x * y.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadValue(other)
        if not isinstance(other, QuadValue):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.m == other.m

    def __lt__(self, other):
        x, y, _ = self._join(other)
        if x is NotImplemented:
            return NotImplemented
        return (x - y).sign() < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- conversions -----------------------------------------------------

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def __repr__(self):
        return f"QuadValue({self.a!r}, {self.b!r}, {self.m})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.m})"
        bpart = root if self.b == 1 else f"-{root}" if self.b == -1 else f"{self.b}*{root}"
        if self.a == 0:
            return bpart
        return f"{self.a}+{bpart}" if self.b > 0 else f"{self.a}{bpart}"

    def json_dict(self) -> dict:
        """Serialized form {"a": "p/q", "b": "r/s", "m": k}."""
        return {"a": str(self.a), "b": str(self.b), "m": self.m}


QV_ZERO = QuadValue(0)
QV_ONE = QuadValue(1)


def _lcm(x: int, y: int) -> int:
    return x // math.gcd(x, y) * y


class QuadMatrix:
    """Square matrix over Q(sqrt(m)), stored as (A + B*sqrt(m)) / den.

    A and B are object-dtype integer ndarrays; den is a positive integer.
    Products and sums stay exact; entries come back out as QuadValue.
    """

    __slots__ = ("a", "b", "den", "m", "n")

    def __init__(self, a: np.ndarray, b: np.ndarray, den: int, m: int):
        if den < 0:
            a, b, den = -a, -b, -den
        self.a = a
        self.b = b
        self.den = den
        self.m = m
        self.n = a.shape[0]

    @classmethod
    def from_int(cls, mat: np.ndarray | Iterable, m: int = 0) -> "QuadMatrix":
        a = np.asarray(mat, dtype=object)
        return cls(a, np.zeros_like(a), 1, m)

    @classmethod
    def identity(cls, n: int, m: int = 0) -> "QuadMatrix":
        return cls.from_int(np.eye(n, dtype=np.int64), m)

    @classmethod
    def constant(cls, n: int, value: QuadValue, m: int | None = None) -> "QuadMatrix":
        """Matrix with every entry equal to value."""
        if m is None:
            m = value.m
        den = _lcm(value.a.denominator, value.b.denominator if value.b else 1)
        a = np.full((n, n), int(value.a * den), dtype=object)
        b = np.full((n, n), int(value.b * den), dtype=object)
        return cls(a, b, den, m)

    def _coerce(self, other: "QuadMatrix") -> int:
        if self.m != 0 and other.m != 0 and self.m != other.m:
            raise MixedRadicandsError(f"sqrt({self.m}) vs sqrt({other.m})")
        return self.m or other.m

    def __add__(self, other: "QuadMatrix") -> "QuadMatrix":
        m = self._coerce(other)
        den = _lcm(self.den, other.den)
        s, t = den // self.den, den // other.den
        return QuadMatrix(self.a * s + other.a * t, self.b * s + other.b * t, den, m)

    def __sub__(self, other: "QuadMatrix") -> "QuadMatrix":
        m = self._coerce(other)
        den = _lcm(self.den, other.den)
        s, t = den // self.den, den // other.den
        return QuadMatrix(self.a * s - other.a * t, self.b * s - other.b * t, den, m)

    def __neg__(self) -> "QuadMatrix":
        return QuadMatrix(-self.a, -self.b, self.den, self.m)

    def __matmul__(self, other: "QuadMatrix") -> "QuadMatrix":
        m = self._coerce(other)
        a = self.a @ other.a + m * (self.b @ other.b)
        b = self.a @ other.b + self.b @ other.a
        return QuadMatrix(a, b, self.den * other.den, m)

    def scale(self, c: QuadValue) -> "QuadMatrix":
        if c.b != 0 and self.m != 0 and c.m != self.m:
            raise MixedRadicandsError(f"sqrt({c.m}) vs sqrt({self.m})")
        m = self.m or c.m
        q = _lcm(c.a.denominator, c.b.denominator if c.b else 1)
        ca, cb = int(c.a * q), int(c.b * q)
        a = ca * self.a + m * cb * self.b
        b = ca * self.b + cb * self.a
        return QuadMatrix(a, b, self.den * q, m)

    def reduce(self) -> "QuadMatrix":
        """Divide out the gcd of all entries and the denominator."""
        g = self.den
        for row in self.a:
            for x in row:
                g = math.gcd(g, int(x))
        for row in self.b:
            for x in row:
                g = math.gcd(g, int(x))
        if g <= 1:
            return self
        return QuadMatrix(self.a // g, self.b // g, self.den // g, self.m)

    def entry(self, i: int, j: int) -> QuadValue:
        return QuadValue(Fraction(int(self.a[i, j]), self.den),
                         Fraction(int(self.b[i, j]), self.den), self.m)

    def trace(self) -> QuadValue:
        return QuadValue(Fraction(int(np.trace(self.a)), self.den),
                         Fraction(int(np.trace(self.b)), self.den), self.m)

    def __eq__(self, other):
        if not isinstance(other, QuadMatrix):
            return NotImplemented
        if self.n != other.n:
            return False
        # compare cross-multiplied integer parts; radicands must be compatible
        if self.m != other.m and not (self._is_rational() and other._is_rational()):
            return False
        return (np.array_equal(self.a * other.den, other.a * self.den)
                and np.array_equal(self.b * other.den, other.b * self.den))

    def _is_rational(self) -> bool:
        return not self.b.any()

    def is_zero(self) -> bool:
        return not self.a.any() and not self.b.any()

    def to_float(self) -> np.ndarray:
        return (self.a.astype(np.float64)
                + math.sqrt(self.m) * self.b.astype(np.float64)) / self.den

    def to_lists(self) -> list[list[QuadValue]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def __repr__(self):
        return f"QuadMatrix(n={self.n}, m={self.m}, den={self.den})"
