"""Exact planar geometry in a two-direction frame.

All torus geometry is done in coordinates along a pair of independent
directions (for a hyperbolic matrix: the unstable/stable eigendirections),
where parallelograms become axis-aligned rectangles and the integer lattice
has surd coordinates.  Everything here is decided by exact comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qfield import Surd, ceil_surd, surd_max, surd_min


@dataclass(frozen=True)
class Frame:
    """Basis (e1, e2) of the plane; frame coords (u, s): p = u*e1 + s*e2."""

    e1: tuple[Surd, Surd]
    e2: tuple[Surd, Surd]

    def __post_init__(self):
        assert self.det().sign() != 0, "frame directions must be independent"
        assert self.e1[1].sign() != 0 and self.e2[1].sign() != 0, (
            "frame directions must have nonzero second component"
        )

    def det(self) -> Surd:
        return self.e1[0] * self.e2[1] - self.e1[1] * self.e2[0]

    def to_plane(self, u: Surd, s: Surd) -> tuple[Surd, Surd]:
        return (u * self.e1[0] + s * self.e2[0], u * self.e1[1] + s * self.e2[1])

    def to_frame(self, x, y) -> tuple[Surd, Surd]:
        d = self.det()
        u = (x * self.e2[1] - y * self.e2[0]) / d
        s = (y * self.e1[0] - x * self.e1[1]) / d
        return u, s

    def lattice_coords(self, m: int, n: int) -> tuple[Surd, Surd]:
        one = Surd(1, 0, self.e1[0].D)
        return self.to_frame(one * m, one * n)

    def slopes_irrational(self) -> bool:
        return not (self.e1[0] / self.e1[1]).is_rational and not (
            self.e2[0] / self.e2[1]
        ).is_rational

    # -- lattice enumeration ------------------------------------------------

    def lattice_in_box(self, u0: Surd, u1: Surd, s0: Surd, s1: Surd) -> list[tuple[int, int]]:
        """All integer points whose frame coords lie in the closed box.

        Scans n = y-coordinate-combination per unit, then the O(1) many m
        compatible with the box; boxes here are thin slivers, so this stays
        linear in the box's n-span.
        """
        e1y, e2y = self.e1[1], self.e2[1]
        corners = [u * e1y + s * e2y for u in (u0, u1) for s in (s0, s1)]
        n_lo = ceil_surd(min(corners))
        n_hi = max(corners).floor()
        out = []
        for n in range(n_lo, n_hi + 1):
            # on the line u*e1y + s*e2y = n, find u with s(u) in [s0, s1]
            ua = (n - s0 * e2y) / e1y
            ub = (n - s1 * e2y) / e1y
            lo = surd_max(surd_min(ua, ub), u0)
            hi = surd_min(surd_max(ua, ub), u1)
            if hi < lo:
                continue
            # m(u) = u*e1x + s(u)*e2x is monotone in u (slope det/e1y... nonzero)
            def m_of(u: Surd) -> Surd:
                s = (n - u * e1y) / e2y
                return u * self.e1[0] + s * self.e2[0]

            ma, mb = m_of(lo), m_of(hi)
            m_lo = ceil_surd(surd_min(ma, mb))
            m_hi = surd_max(ma, mb).floor()
            for m in range(m_lo, m_hi + 1):
                u, s = self.lattice_coords(m, n)
                if not (u < u0 or u1 < u or s < s0 or s1 < s):
                    out.append((m, n))
        return out

    def lattice_on_u_line(self, c: Surd) -> tuple[int, int] | None:
        """The unique integer point with u-coordinate exactly c, if any."""
        # m*e2y - n*e2x = c*det, split into rational and sqrt(D) parts
        return _solve_integer_pair(self.e2[1], self.e2[0], c * self.det())

    def lattice_on_s_line(self, c: Surd) -> tuple[int, int] | None:
        """The unique integer point with s-coordinate exactly c, if any."""
        # n*e1x - m*e1y = c*det
        sol = _solve_integer_pair(self.e1[0], self.e1[1], c * self.det())
        if sol is None:
            return None
        n, m = sol
        return m, n


def _solve_integer_pair(p: Surd, q: Surd, rhs: Surd) -> tuple[int, int] | None:
    """Integer (m, n) with m*p - n*q = rhs, via the two rational components."""
    det = p.a * (-q.b) - (-q.a) * p.b
    if det == 0:
        raise ArithmeticError("degenerate coefficient pair for lattice line solve")
    m = (rhs.a * (-q.b) - (-q.a) * rhs.b) / det
    n = (p.a * rhs.b - rhs.a * p.b) / det
    if m.denominator != 1 or n.denominator != 1:
        return None
    m, n = int(m), int(n)
    assert m * p - n * q == rhs
    return m, n


@dataclass(frozen=True)
class Rect:
    """Closed axis-aligned rectangle [u0, u1] x [s0, s1] in frame coords."""

    u0: Surd
    u1: Surd
    s0: Surd
    s1: Surd

    def __post_init__(self):
        assert self.u0 < self.u1 and self.s0 < self.s1, "degenerate rectangle"

    @property
    def u_len(self) -> Surd:
        return self.u1 - self.u0

    @property
    def s_len(self) -> Surd:
        return self.s1 - self.s0

    def area(self) -> Surd:
        return self.u_len * self.s_len

    def translate(self, du, ds) -> Rect:
        return Rect(self.u0 + du, self.u1 + du, self.s0 + ds, self.s1 + ds)

    def scale(self, fu: Surd, fs: Surd) -> Rect:
        a, b = self.u0 * fu, self.u1 * fu
        c, d = self.s0 * fs, self.s1 * fs
        return Rect(surd_min(a, b), surd_max(a, b), surd_min(c, d), surd_max(c, d))

    def overlaps_open(self, other: Rect) -> bool:
        return (
            self.u0 < other.u1
            and other.u0 < self.u1
            and self.s0 < other.s1
            and other.s0 < self.s1
        )

    def overlaps_closed(self, other: Rect) -> bool:
        return (
            not (self.u1 < other.u0 or other.u1 < self.u0)
            and not (self.s1 < other.s0 or other.s1 < self.s0)
        )

    def intersect(self, other: Rect) -> Rect | None:
        """Closure of the open intersection; None if interiors are disjoint."""
        if not self.overlaps_open(other):
            return None
        return Rect(
            surd_max(self.u0, other.u0),
            surd_min(self.u1, other.u1),
            surd_max(self.s0, other.s0),
            surd_min(self.s1, other.s1),
        )

    def contains_point(self, u: Surd, s: Surd, closed: bool = True) -> bool:
        if closed:
            return not (u < self.u0 or self.u1 < u or s < self.s0 or self.s1 < s)
        return self.u0 < u and u < self.u1 and self.s0 < s and s < self.s1


def hull_interval(a: Surd, b: Surd) -> tuple[Surd, Surd]:
    return (a, b) if a < b else (b, a)


def rect_between(u_a: Surd, u_b: Surd, s_a: Surd, s_b: Surd) -> Rect:
    (u0, u1), (s0, s1) = hull_interval(u_a, u_b), hull_interval(s_a, s_b)
    return Rect(u0, u1, s0, s1)


def overlap_translates(
    frame: Frame, A: Rect, B: Rect, closed: bool = False
) -> list[tuple[int, int]]:
    """Lattice translates t with A and B+t overlapping (open interiors by
    default, closures when closed=True)."""
    hits = []
    for m, n in frame.lattice_in_box(
        A.u0 - B.u1, A.u1 - B.u0, A.s0 - B.s1, A.s1 - B.s0
    ):
        du, ds = frame.lattice_coords(m, n)
        shifted = B.translate(du, ds)
        if (A.overlaps_closed(shifted) if closed else A.overlaps_open(shifted)):
            hits.append((m, n))
    return hits


def reduce_rect(frame: Frame, rect: Rect) -> Rect:
    """Translate a rectangle so its anchor corner lies in [0,1)^2 (standard)."""
    x, y = frame.to_plane(rect.u0, rect.s0)
    dx, dy = -x.floor(), -y.floor()
    if dx == 0 and dy == 0:
        return rect
    du, ds = frame.lattice_coords(dx, dy)
    return rect.translate(du, ds)


def rect_key(rect: Rect):
    return tuple(
        (v.a, v.b) for v in (rect.u0, rect.u1, rect.s0, rect.s1)
    )


def point_in_torus_rect(
    frame: Frame, rect: Rect, u: Surd, s: Surd, closed: bool = True
) -> bool:
    """Membership of a torus point in the projected rectangle."""
    for m, n in frame.lattice_in_box(
        u - rect.u1, u - rect.u0, s - rect.s1, s - rect.s0
    ):
        du, ds = frame.lattice_coords(m, n)
        if rect.translate(du, ds).contains_point(u, s, closed=closed):
            return True
    return False
