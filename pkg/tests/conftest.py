"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from torux import MatZ2, Surd, is_hyperbolic
from torux.qfield import is_square


def random_hyperbolic(rng: random.Random, span: int = 6) -> MatZ2:
    while True:
        a, b, c = (rng.randint(-span, span) for _ in range(3))
        for det in (1, -1):
            # solve a*d - b*c = det for integer d
            if a == 0:
                continue
            num = det + b * c
            if num % a:
                continue
            d = num // a
            if abs(d) > 3 * span:
                continue
            try:
                A = MatZ2(a, b, c, d)
            except ValueError:
                continue
            if A.c != 0 and is_hyperbolic(A):
                return A


def random_surd(rng: random.Random, D: int | None = None) -> Surd:
    if D is None:
        D = rng.choice([2, 3, 5, 6, 7, 8, 10, 12, 13])
    while True:
        a = Fraction(rng.randint(-12, 12), rng.randint(1, 9))
        b = Fraction(rng.randint(-12, 12), rng.randint(1, 9))
        if b != 0:
            return Surd(a, b, D)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20250809)


# -- independent continued-fraction oracle (classical PQa on integer triples) --


def _floor_quadratic(P: int, Q: int, N: int) -> int:
    """floor((P + sqrt(N)) / Q) by integer arithmetic, any sign of Q."""
    assert Q != 0 and N > 0 and not is_square(N)
    if Q < 0:
        # x = -(P + sqrt(N))/(-Q) is irrational, so floor(x) = -floor(-x) - 1
        return -_floor_quadratic(P, -Q, N) - 1
    # sqrt(N) in (m, m+1), and no integer can separate (P+m)/Q from (P+sqrt(N))/Q
    return (P + math.isqrt(N)) // Q


def pqa_digits(P: int, Q: int, N: int, count: int) -> list[int]:
    """First digits of the CF of (P + sqrt(N))/Q; requires Q | (N - P^2)."""
    assert (N - P * P) % Q == 0, "normalize the input triple first"
    out = []
    for _ in range(count):
        a = _floor_quadratic(P, Q, N)
        out.append(a)
        P = a * Q - P
        Q = (N - P * P) // Q
    return out


def surd_pqa_digits(x: Surd, count: int) -> list[int]:
    """CF digits of a surd via the integer-triple oracle."""
    # x = (p + q*sqrt(D))/r with q > 0 after normalization
    r = math.lcm(x.a.denominator, x.b.denominator)
    p = int(x.a * r)
    q = int(x.b * r)
    if q < 0:
        p, q, r = -p, -q, -r
    N = q * q * x.D
    P, Q = p, r
    # ensure Q | (N - P^2) by the classical scaling
    if (N - P * P) % Q:
        P, Q, N = P * abs(Q), Q * abs(Q), N * Q * Q
    return pqa_digits(P, Q, N, count)


# -- Theorem 2 brute-force oracles under conditions (19) / (20) ----------------


def brute_one_sided(omega: Surd, q_max: int) -> list[tuple[int, int, str]]:
    """Condition (19) by brute force: for each q the nearest p on each side,
    kept when no earlier residual lies in the closed interval toward 0."""
    out = []
    best_below = None
    best_above = None
    w = Surd(0, 0, omega.D)
    for q in range(1, q_max + 1):
        w = w + omega
        fl = w.floor()
        r_below = w - fl  # q*omega - p for p = floor, in (0, 1)
        r_above = 1 - r_below  # |q*omega - p| for p = floor + 1
        if best_below is None or r_below < best_below:
            out.append((fl, q, "below"))
            best_below = r_below
        if best_above is None or r_above < best_above:
            out.append((fl + 1, q, "above"))
            best_above = r_above
    return sorted(out, key=lambda t: (t[1], t[2] != "below"))


def brute_two_sided(omega: Surd, q_max: int) -> list[tuple[int, int, str]]:
    """Condition (20) by brute force: |q*omega - p| strictly beats every
    earlier denominator and the same-q rival."""
    out = []
    best = None
    w = Surd(0, 0, omega.D)
    for q in range(1, q_max + 1):
        w = w + omega
        fl = w.floor()
        r_below = w - fl
        r_above = 1 - r_below
        for p, r, rival in ((fl, r_below, r_above), (fl + 1, r_above, r_below)):
            if (best is None or r < best) and r < rival:
                out.append((p, q, "below" if p == fl else "above"))
        cur = r_below if r_below < r_above else r_above
        best = cur if best is None or cur < best else best
    return out
