"""Exact arithmetic in a fixed real quadratic field Q(sqrt(D)).

A Surd is a + b*sqrt(D) with rational a, b and a fixed positive non-square
integer radicand D.  All comparisons, floors and signs are decided by integer
arithmetic; floats exist only for rendering.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering

Rational = Fraction

_Num = int | Fraction


class RadicandMismatch(ValueError):
    """Raised when two surds over different radicands are combined."""


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _check_radicand(D: int) -> None:
    if D <= 0 or is_square(D):
        raise ValueError(f"radicand must be a positive non-square integer, got {D}")


@total_ordering
class Surd:
    """Exact element a + b*sqrt(D) of the real quadratic field Q(sqrt(D))."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a: _Num, b: _Num, D: int) -> None:
        _check_radicand(D)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "D", D)

    def __setattr__(self, name, value):
        raise AttributeError("Surd is immutable")

    @classmethod
    def rational(cls, x: _Num, D: int) -> Surd:
        return cls(x, 0, D)

    @classmethod
    def sqrt(cls, D: int) -> Surd:
        return cls(0, 1, D)

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def galois_conjugate(self) -> Surd:
        return Surd(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        """Field norm (a + b*sqrt(D))(a - b*sqrt(D)) = a^2 - b^2 D."""
        return self.a * self.a - self.b * self.b * self.D

    def with_radicand(self, D: int) -> Surd:
        """Rewrite over a commensurable radicand (b*sqrt(D) = b'*sqrt(D'))."""
        if D == self.D:
            return self
        _check_radicand(D)
        if self.b == 0:
            return Surd(self.a, 0, D)
        # b' = b * sqrt(self.D / D); rational only when self.D * D is a square
        prod = self.D * D
        r = math.isqrt(prod)
        if r * r != prod:
            raise RadicandMismatch(f"cannot rewrite sqrt({self.D}) over sqrt({D})")
        return Surd(self.a, self.b * Fraction(r, D), D)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Surd | None:
        if isinstance(other, Surd):
            if other.D != self.D:
                raise RadicandMismatch(f"mixed radicands {self.D} and {other.D}")
            return other
        if isinstance(other, (int, Fraction)):
            return Surd(other, 0, self.D)
        return None

    def __add__(self, other) -> Surd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Surd(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __neg__(self) -> Surd:
        return Surd(-self.a, -self.b, self.D)

    def __sub__(self, other) -> Surd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Surd(self.a - o.a, self.b - o.b, self.D)

    def __rsub__(self, other) -> Surd:
        return -self + other

    def __mul__(self, other) -> Surd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Surd(
            self.a * o.a + self.b * o.b * self.D,
            self.a * o.b + self.b * o.a,
            self.D,
        )

    __rmul__ = __mul__

    def inverse(self) -> Surd:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero surd")
        return Surd(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other) -> Surd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> Surd:
        return self.inverse() * other

    def __pow__(self, n: int) -> Surd:
        if n < 0:
            return self.inverse() ** (-n)
        out = Surd(1, 0, self.D)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- order -------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real value."""
        a, b = self.a, self.b
        if b == 0:
            return 0 if a == 0 else (1 if a > 0 else -1)
        if a == 0:
            return 1 if b > 0 else -1
        sa = 1 if a > 0 else -1
        sb = 1 if b > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: compare a^2 with b^2 D (equality impossible, D non-square)
        lhs = a * a
        rhs = b * b * self.D
        if lhs == rhs:
            raise AssertionError("non-square radicand cannot balance a^2 = b^2 D")
        return sa if lhs > rhs else sb

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, Surd):
            if other.D != self.D:
                raise RadicandMismatch(f"mixed radicands {self.D} and {other.D}")
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def __floor__(self) -> int:
        return self.floor()

    def floor(self) -> int:
        """Greatest integer <= value, by integer arithmetic only."""
        if self.b == 0:
            return math.floor(self.a)
        # common denominator: (p + q*sqrt(D)) / r with r > 0
        r = math.lcm(self.a.denominator, self.b.denominator)
        p = self.a.numerator * (r // self.a.denominator)
        q = self.b.numerator * (r // self.b.denominator)
        m = math.isqrt(q * q * self.D)
        if q > 0:
            n = (p + m) // r  # m <= q*sqrt(D) < m+1
        else:
            n = (p - m - 1) // r  # -(m+1) < q*sqrt(D) < -m
        while self < n:
            n -= 1
        while not self < n + 1:
            n += 1
        return n

    # -- rendering only ----------------------------------------------------

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __repr__(self) -> str:
        return f"Surd({self.a}, {self.b}, {self.D})"

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt({self.D})"


def surd_min(x: Surd, y: Surd) -> Surd:
    return x if x < y else y


def surd_max(x: Surd, y: Surd) -> Surd:
    return x if y < x else y


def ceil_surd(x: Surd) -> int:
    return -((-x).floor())


def frac_part(x: Surd) -> Surd:
    return x - x.floor()
