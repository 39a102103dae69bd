"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

A `QuadraticNumber` is p + q*sqrt(d) with rational p, q and a squarefree
positive integer d.  Rational values are normalized to d = 0 so they mix
freely with any field; two genuinely irrational values must share d.
Comparisons, signs and floors are exact; no floating point is involved
anywhere except the explicit `__float__` conversion.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def squarefree_decompose(m: int) -> tuple[int, int]:
    """Return (s, f) with m = s * f**2 and s squarefree (m > 0)."""
    if m <= 0:
        raise ValueError(f"need a positive integer, got {m}")
    s, f = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    return s * m, f


def _floor_of_root(x: Fraction) -> int:
    """floor(sqrt(x)) for a nonnegative rational x."""
    if x < 0:
        raise ValueError("negative radicand")
    num, den = x.numerator, x.denominator
    return math.isqrt(num * den) // den


@dataclass(frozen=True)
class QuadraticNumber:
    """p + q*sqrt(d), exact."""

    p: Fraction
    q: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        p = Fraction(self.p)
        q = Fraction(self.q)
        d = int(self.d)
        if q == 0:
            d = 0
        elif d <= 0:
            raise ValueError("irrational part needs a positive radicand d")
        else:
            s, f = squarefree_decompose(d)
            if s == 1:
                p, q, d = p + q * f, Fraction(0), 0
            else:
                q, d = q * f, s
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    # -- helpers ----------------------------------------------------------

    @staticmethod
    def of(value) -> "QuadraticNumber":
        if isinstance(value, QuadraticNumber):
            return value
        if isinstance(value, Rational):
            return QuadraticNumber(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} to QuadraticNumber")

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.p, -self.q, self.d)

    def _join_d(self, other: "QuadraticNumber") -> int:
        if self.q and other.q and self.d != other.d:
            raise ValueError(f"mixed radicands: sqrt({self.d}) vs sqrt({other.d})")
        return self.d if self.q else other.d

    # -- ring/field operations ---------------------------------------------

    def __add__(self, other):
        other = QuadraticNumber.of(other)
        d = self._join_d(other)
        return QuadraticNumber(self.p + other.p, self.q + other.q, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.p, -self.q, self.d)

    def __sub__(self, other):
        return self + (-QuadraticNumber.of(other))

    def __rsub__(self, other):
        return QuadraticNumber.of(other) + (-self)

    def __mul__(self, other):
        other = QuadraticNumber.of(other)
        d = self._join_d(other)
        return QuadraticNumber(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticNumber":
        norm = self.p * self.p - self.q * self.q * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticNumber(self.p / norm, -self.q / norm, self.d)

    def __truediv__(self, other):
        return self * QuadraticNumber.of(other).inverse()

    def __rtruediv__(self, other):
        return QuadraticNumber.of(other) * self.inverse()

    # -- exact order --------------------------------------------------------

    def sign(self) -> int:
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # p and q have opposite signs: compare p^2 against q^2 d
        lhs, rhs = p * p, q * q * d
        if p > 0:
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def __bool__(self):
        return not (self.p == 0 and self.q == 0)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __eq__(self, other):
        if isinstance(other, (QuadraticNumber, Rational)):
            other = QuadraticNumber.of(other)
            return self.p == other.p and self.q == other.q and self.d == other.d
        return NotImplemented

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def __floor__(self) -> int:
        if self.q == 0:
            return math.floor(self.p)
        root = _floor_of_root(self.q * self.q * self.d)
        t = root if self.q > 0 else -root - 1  # floor(q sqrt(d)) is within 1
        k = math.floor(self.p) + t
        while self >= k + 1:
            k += 1
        while self < k:
            k -= 1
        return k

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(self.d) if self.q else float(self.p)

    def __repr__(self):
        if self.q == 0:
            return f"{self.p}"
        return f"({self.p} + {self.q}*sqrt({self.d}))"

    def to_triple(self) -> list:
        """JSON form: ["p", "q", d] with p, q as exact fraction strings."""
        return [str(self.p), str(self.q), self.d]

    @staticmethod
    def from_triple(triple) -> "QuadraticNumber":
        p, q, d = triple
        return QuadraticNumber(Fraction(p), Fraction(q), int(d))
