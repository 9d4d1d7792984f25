"""Periodic continued fractions of quadratic surds.

Expansion with exact period detection, evaluation back to a surd, the
slope moves T1 (x+1), T2 (1/x), T3 (-x) on both the surd and the word level,
convergents, and the one/two-sided best rational approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qfield import Surd, frac_part


class RationalInput(ValueError):
    """Raised when an operation requires an irrational surd."""


def _primitive(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


@dataclass(frozen=True)
class CFExpansion:
    """Eventually periodic regular continued fraction [a0; a1, ..., (p1, ...)].

    Stored in canonical form: the preperiod is shortest possible and the
    period word is primitive.  Only a0 may be non-positive.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        pre = tuple(self.preperiod)
        per = _primitive(tuple(self.period))
        if not per:
            raise ValueError("period must be nonempty")
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = (per[-1],) + per[:-1]
        if any(d < 1 for d in per):
            raise ValueError(f"periodic digits must be >= 1, got {per}")
        if any(d < 1 for d in pre[1:]):
            raise ValueError(f"digits after a0 must be >= 1, got {pre}")
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def digit(self, n: int) -> int:
        if n < len(self.preperiod):
            return self.preperiod[n]
        return self.period[(n - len(self.preperiod)) % len(self.period)]

    def digits(self, n: int) -> list[int]:
        return [self.digit(i) for i in range(n)]

    def drop(self, j: int) -> CFExpansion:
        """The continued fraction of the j-th complete quotient."""
        if j <= len(self.preperiod):
            return CFExpansion(self.preperiod[j:], self.period)
        r = (j - len(self.preperiod)) % len(self.period)
        return CFExpansion((), self.period[r:] + self.period[:r])

    @property
    def period_length(self) -> int:
        return len(self.period)

    def __str__(self) -> str:
        per = "(" + ", ".join(str(d) for d in self.period) + ")"
        if not self.preperiod:
            return f"[{per}]"
        head = str(self.preperiod[0])
        rest = ", ".join(str(d) for d in self.preperiod[1:])
        return f"[{head}; {rest}, {per}]" if rest else f"[{head}; {per}]"


def canonical_period(cf: CFExpansion) -> tuple[int, ...]:
    """Lexicographically minimal rotation of the primitive period word."""
    w = cf.period
    return min(w[i:] + w[:i] for i in range(len(w)))


def expand(x: Surd) -> CFExpansion:
    """Regular CF of a quadratic surd, with the period found exactly.

    Complete quotients repeat exactly (Lagrange); the first repeat yields the
    shortest preperiod and a primitive period.
    """
    if x.is_rational:
        raise RationalInput(f"{x} is rational; its CF is finite")
    seen: dict[Surd, int] = {}
    digits: list[int] = []
    cur = x
    while cur not in seen:
        seen[cur] = len(digits)
        a = cur.floor()
        digits.append(a)
        cur = (cur - a).inverse()
    m = seen[cur]
    return CFExpansion(tuple(digits[:m]), tuple(digits[m:]))


def evaluate(cf: CFExpansion, radicand: int | None = None) -> Surd:
    """Exact value of an eventually periodic CF.

    The purely periodic tail solves its Moebius fixed-point equation; the
    result's radicand is tr^2 - 4*det of the period-word matrix unless a
    commensurable target radicand is supplied.
    """
    p, pp, q, qp = 1, 0, 0, 1  # product of [[d,1],[1,0]] over the period word
    for d in cf.period:
        p, pp, q, qp = d * p + pp, p, d * q + qp, q
    disc = (p + qp) ** 2 - 4 * (p * qp - pp * q)
    y = Surd(Fraction(p - qp, 2 * q), Fraction(1, 2 * q), disc)
    assert y > 1, "purely periodic value must exceed 1"
    n11, n12, n21, n22 = 1, 0, 0, 1
    for d in cf.preperiod:
        n11, n12, n21, n22 = d * n11 + n12, n11, d * n21 + n22, n21
    x = (y * n11 + n12) / (y * n21 + n22)
    if radicand is not None:
        x = x.with_radicand(radicand)
    return x


# -- the three slope moves ---------------------------------------------------


def apply_T(i: int, x: Surd) -> Surd:
    """T1(x) = x + 1, T2(x) = 1/x, T3(x) = -x on the surd level."""
    if i == 1:
        return x + 1
    if i == 2:
        if x.is_zero:
            raise ZeroDivisionError("T2 of zero")
        return x.inverse()
    if i == 3:
        return -x
    raise ValueError(f"no transformation T{i}")


def apply_T_inverse(i: int, x: Surd) -> Surd:
    if i == 1:
        return x - 1
    return apply_T(i, x)  # T2, T3 are involutions


def apply_T_cf(i: int, cf: CFExpansion) -> CFExpansion:
    """The same moves performed by rewriting the digit word."""
    a0 = cf.digit(0)
    if i == 1:
        tail = cf.drop(1)
        return CFExpansion((a0 + 1,) + tail.preperiod, tail.period)
    if i == 2:
        if a0 > 0:
            return CFExpansion((0,) + cf.preperiod, cf.period)
        if a0 == 0:
            return cf.drop(1)
        # negative values route through T2 = T3 . T2 . T3
        return apply_T_cf(3, apply_T_cf(2, apply_T_cf(3, cf)))
    if i == 3:
        a1 = cf.digit(1)
        if a1 == 1:
            a2 = cf.digit(2)
            tail = cf.drop(3)
            return CFExpansion((-a0 - 1, a2 + 1) + tail.preperiod, tail.period)
        tail = cf.drop(2)
        return CFExpansion((-a0 - 1, 1, a1 - 1) + tail.preperiod, tail.period)
    raise ValueError(f"no transformation T{i}")


# -- convergents and best approximations -------------------------------------


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    side: str  # "below" if p/q < omega else "above"

    def __post_init__(self):
        from math import gcd

        assert self.q >= 1 and gcd(abs(self.p), self.q) == 1
        assert self.side in ("below", "above")

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


def _pq_pairs(cf: CFExpansion, n: int) -> list[tuple[int, int]]:
    out = []
    p1, q1, p2, q2 = 1, 0, 0, 1  # (p_{k-1}, q_{k-1}), (p_{k-2}, q_{k-2})
    for k in range(n):
        a = cf.digit(k)
        p, q = a * p1 + p2, a * q1 + q2
        out.append((p, q))
        p1, q1, p2, q2 = p, q, p1, q1
    return out


def convergents(cf: CFExpansion, n: int) -> list[Convergent]:
    """First n convergents p_k/q_k with their side relative to the value."""
    omega = evaluate(cf)
    out = []
    for p, q in _pq_pairs(cf, n):
        side = "below" if Surd.rational(Fraction(p, q), omega.D) < omega else "above"
        out.append(Convergent(p, q, side))
    return out


def semiconvergent(cf: CFExpansion, k: int, l: int) -> tuple[int, int]:
    """The intermediate fraction (l*p_k + p_{k-1}) / (l*q_k + q_{k-1})."""
    pairs = _pq_pairs(cf, k + 1)
    pk, qk = pairs[k]
    pk1, qk1 = pairs[k - 1] if k >= 1 else (1, 0)
    return l * pk + pk1, l * qk + qk1


def _side_of(p: int, q: int, omega: Surd) -> str:
    return "below" if Surd.rational(Fraction(p, q), omega.D) < omega else "above"


def best_approx_one_sided(omega: Surd, q_max: int) -> list[Convergent]:
    """One-sided best approximations of the second kind with q <= q_max.

    In terms of the expansion [b0; b1, b2, ...] these are b0/1 together with
    all intermediate fractions of the blocks k >= 1, ordered by denominator
    with the below/above blocks alternating.
    """
    if omega.is_rational:
        raise RationalInput("best approximations need an irrational target")
    cf = expand(omega)
    out = [Convergent(cf.digit(0), 1, "below")]
    k = 1
    p2, q2 = 1, 0  # (p_{k-2}, q_{k-2}) for current k
    p1, q1 = cf.digit(0), 1  # (p_{k-1}, q_{k-1})
    while q1 + q2 <= q_max:  # smallest denominator in block k
        b = cf.digit(k)
        for l in range(1, b + 1):
            p, q = l * p1 + p2, l * q1 + q2
            if q > q_max:
                break
            out.append(Convergent(p, q, _side_of(p, q, omega)))
        p1, q1, p2, q2 = b * p1 + p2, b * q1 + q2, p1, q1
        k += 1
    return out


def best_approx_two_sided(omega: Surd, q_max: int) -> list[Convergent]:
    """Two-sided best approximations: the convergents, with the 0-th one
    present only when it beats floor(omega)+1 (i.e. when frac(omega) < 1/2,
    equivalently b1 >= 2)."""
    if omega.is_rational:
        raise RationalInput("best approximations need an irrational target")
    cf = expand(omega)
    start = 0 if cf.digit(1) >= 2 else 1
    out = []
    p1, q1, p2, q2 = 1, 0, 0, 1
    k = 0
    while True:
        a = cf.digit(k)
        p, q = a * p1 + p2, a * q1 + q2
        if q > q_max:
            break
        if k >= start:
            out.append(Convergent(p, q, _side_of(p, q, omega)))
        p1, q1, p2, q2 = p, q, p1, q1
        k += 1
    return out


def frac_of(omega: Surd) -> Surd:
    return frac_part(omega)
