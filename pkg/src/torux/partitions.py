"""Construction, validation and classification of Markov-type partitions.

Everything is computed in the eigenframe of the automorphism, where pieces
are axis-aligned rectangles, the map scales the axes by (lambda, mu), and
every condition is an exact predicate in surd arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cfrac import CFExpansion, expand
from .gl2z import MatZ2, NotHyperbolic, EigenData, eigen_data, fixpoints, is_hyperbolic
from .geometry import (
    Frame,
    Rect,
    overlap_translates,
    rect_between,
    rect_key,
    reduce_rect,
)
from .qfield import Surd, ceil_surd, surd_max, surd_min

QMP, PREMP, STRMP = "qMp", "preMp", "strMp"


class RationalSlope(ValueError):
    pass


class DegenerateArc(ValueError):
    pass


class WindowError(ValueError):
    """Requested entry lies outside the constructible window."""


class ConstructionWindowTooSmall(RuntimeError):
    pass


def eigenframe(eig: EigenData) -> Frame:
    one = Surd(1, 0, eig.D)
    return Frame((eig.kappa, one), (eig.kappa_s, one))


@dataclass(frozen=True)
class TorusPartition:
    """Finite family of frame rectangles projected to the torus."""

    frame: Frame
    pieces: tuple[Rect, ...]
    kind: str

    def area_standard(self) -> Surd:
        d = self.frame.det()
        if d.sign() < 0:
            d = -d
        total = Surd(0, 0, d.D)
        for pc in self.pieces:
            total = total + pc.area()
        return total * d

    def signature(self):
        """Order-free exact identity of the projected pieces."""
        return tuple(sorted(rect_key(reduce_rect(self.frame, pc)) for pc in self.pieces))


def map_partition(P: TorusPartition, eig: EigenData, inverse: bool = False) -> TorusPartition:
    lam, mu = eig.lambda_u, eig.lambda_s
    if inverse:
        lam, mu = lam.inverse(), mu.inverse()
    return TorusPartition(P.frame, tuple(pc.scale(lam, mu) for pc in P.pieces), P.kind)


# -- validation ---------------------------------------------------------------


@dataclass
class ValidationReport:
    kind: str
    checks: dict[str, bool]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _f(x: Surd) -> str:
    return f"{float(x):.6f}"


def _disjointness_failures(P: TorusPartition) -> list[str]:
    out = []
    for i in range(len(P.pieces)):
        for j in range(i, len(P.pieces)):
            for t in overlap_translates(P.frame, P.pieces[i], P.pieces[j]):
                if i == j and t == (0, 0):
                    continue
                out.append(f"pieces {i} and {j}+{t} have overlapping interiors")
    return out


def _condition_I_failures(P: TorusPartition, eig: EigenData) -> list[str]:
    lam, mu = eig.lambda_u, eig.lambda_s
    fr = P.frame
    images = [pc.scale(lam, mu) for pc in P.pieces]
    out = []
    for i, img in enumerate(images):
        for u_side in (img.u0, img.u1):
            if not _stable_side_covered(fr, u_side, img.s0, img.s1, P.pieces):
                out.append(
                    f"stable side u={_f(u_side)} of image of piece {i} "
                    f"lies on no piece's stable side"
                )
    for i, pc in enumerate(P.pieces):
        for s_side in (pc.s0, pc.s1):
            if not _unstable_side_covered(fr, s_side, pc.u0, pc.u1, images):
                out.append(
                    f"unstable side s={_f(s_side)} of piece {i} "
                    f"lies on no image's unstable side"
                )
    return out


def _stable_side_covered(fr: Frame, u_side, s_lo, s_hi, rects) -> bool:
    for r in rects:
        for uj in (r.u0, r.u1):
            g = fr.lattice_on_u_line(u_side - uj)
            if g is None:
                continue
            _, ds = fr.lattice_coords(*g)
            if not (s_lo < r.s0 + ds or r.s1 + ds < s_hi):
                return True
    return False


def _unstable_side_covered(fr: Frame, s_side, u_lo, u_hi, rects) -> bool:
    for r in rects:
        for sj in (r.s0, r.s1):
            g = fr.lattice_on_s_line(s_side - sj)
            if g is None:
                continue
            du, _ = fr.lattice_coords(*g)
            if not (u_lo < r.u0 + du or r.u1 + du < u_hi):
                return True
    return False


def _condition_II_failures(P: TorusPartition, eig: EigenData) -> list[str]:
    lam, mu = eig.lambda_u, eig.lambda_s
    out = []
    for i, pc in enumerate(P.pieces):
        img = pc.scale(lam, mu)
        for j, pj in enumerate(P.pieces):
            hits = overlap_translates(P.frame, img, pj)
            if len(hits) > 1:
                out.append(f"image of piece {i} meets piece {j} in {len(hits)} translates {hits}")
    return out


def _point_on_stable_boundary(fr: Frame, uf: Surd, sf: Surd, rects) -> bool:
    for r in rects:
        for uj in (r.u0, r.u1):
            g = fr.lattice_on_u_line(uf - uj)
            if g is None:
                continue
            _, ds = fr.lattice_coords(*g)
            if not (sf < r.s0 + ds or r.s1 + ds < sf):
                return True
    return False


def _point_on_unstable_boundary(fr: Frame, uf: Surd, sf: Surd, rects) -> bool:
    for r in rects:
        for sj in (r.s0, r.s1):
            g = fr.lattice_on_s_line(sf - sj)
            if g is None:
                continue
            du, _ = fr.lattice_coords(*g)
            if not (uf < r.u0 + du or r.u1 + du < uf):
                return True
    return False


def _condition_III_failures(P: TorusPartition, A: MatZ2) -> list[str]:
    fr = P.frame
    D = fr.e1[0].D
    for fx, fy in fixpoints(A):
        uf, sf = fr.to_frame(Surd(fx, 0, D), Surd(fy, 0, D))
        if _point_on_stable_boundary(fr, uf, sf, P.pieces) and _point_on_unstable_boundary(
            fr, uf, sf, P.pieces
        ):
            return []
    return ["no fixpoint lies on an intersection of stable and unstable segments"]


def validate_partition(
    P: TorusPartition,
    kind: str,
    autom: MatZ2 | None = None,
    vertex: bool = False,
) -> ValidationReport:
    """Exact validity report: disjointness and covering for a qMp, plus
    condition I for a preMp, plus condition II for a strMp; condition III
    when a vertex-type partition is claimed."""
    checks: dict[str, bool] = {}
    failures: list[str] = []

    dis = _disjointness_failures(P)
    checks["disjoint"] = not dis
    failures += dis

    area = P.area_standard()
    covers = area == 1
    checks["covers"] = covers
    if not covers:
        failures.append(f"total area {_f(area)} != 1")

    if kind in (PREMP, STRMP):
        if autom is None:
            raise ValueError(f"validating a {kind} needs the automorphism")
        eig = eigen_data(autom)
        assert P.frame == eigenframe(eig), "partition frame must be the eigenframe"
        c1 = _condition_I_failures(P, eig)
        checks["condition_I"] = not c1
        failures += c1
        if kind == STRMP:
            c2 = _condition_II_failures(P, eig)
            checks["condition_II"] = not c2
            failures += c2

    if vertex:
        if autom is None:
            raise ValueError("condition III needs the automorphism")
        c3 = _condition_III_failures(P, autom)
        checks["condition_III"] = not c3
        failures += c3

    return ValidationReport(kind, checks, failures)


# -- T-configurations and two-piece quasi-Markov partitions -------------------


@dataclass(frozen=True)
class TConfiguration:
    """Crossbar arc I (on the e1-line through the base point) plus the leg ray
    along e2; A and B are the defining crossings of the leg's orbit with I."""

    frame: Frame  # e1 = crossbar direction, e2 = leg direction
    j_lo: Surd
    j_hi: Surd
    sigma_a: Surd
    t_a: Surd
    a_point: tuple[int, int]
    sigma_b: Surd
    t_b: Surd
    b_point: tuple[int, int]


def _crossings(frame: Frame, j_lo: Surd, j_hi: Surd, t_hi: Surd):
    """Crossings of the leg ray with the crossbar window, ordered by time.

    A crossing at time t and crossbar position sigma is a lattice point with
    frame coordinates (-sigma, t)."""
    zero = Surd(0, 0, j_lo.D)
    pts = []
    for m, n in frame.lattice_in_box(-j_hi, -j_lo, zero, t_hi):
        x, t = frame.lattice_coords(m, n)
        if t.sign() <= 0:
            continue
        pts.append((t, -x, (m, n)))
    pts.sort(key=lambda c: c[0])
    return pts


def _crossings_until(frame, j_lo, j_hi, enough):
    t_hi = Surd(4, 0, j_lo.D)
    for _ in range(60):
        pts = _crossings(frame, j_lo, j_hi, t_hi)
        if enough(pts):
            return pts
        t_hi = t_hi * 4
    raise ConstructionWindowTooSmall("leg orbit never met the requested pattern")


def t_configuration(e1: tuple[Surd, Surd], e2: tuple[Surd, Surd], j_lo: Surd, j_hi: Surd) -> TConfiguration:
    """Run the crossbar/leg recipe on the arc [j_lo, j_hi] around the base.

    The first pair of consecutive crossings straddling the base point fixes B;
    A is the crossing closest to the base among the earlier ones.
    """
    frame = Frame(e1, e2)
    if not frame.slopes_irrational():
        raise RationalSlope("both directions must have irrational slopes")
    if not (j_lo.sign() < 0 and j_hi.sign() > 0):
        raise DegenerateArc("the starting arc must contain the base point inside")

    def has_straddle(pts):
        return any(
            pts[k][1].sign() != pts[k + 1][1].sign() for k in range(len(pts) - 1)
        )

    pts = _crossings_until(frame, j_lo, j_hi, has_straddle)
    i = next(k for k in range(len(pts) - 1) if pts[k][1].sign() != pts[k + 1][1].sign())
    head = pts[: i + 1]
    # exact closest-to-base crossing among the first i+1
    h = 0
    for k in range(1, len(head)):
        ak, hk = head[k][1], head[h][1]
        if (ak if ak.sign() > 0 else -ak) < (hk if hk.sign() > 0 else -hk):
            h = k
    t_a, sigma_a, a_pt = head[h]
    t_b, sigma_b, b_pt = pts[i + 1]
    assert sigma_a.sign() * sigma_b.sign() < 0
    lo, hi = (sigma_a, sigma_b) if sigma_a < sigma_b else (sigma_b, sigma_a)
    for t, sigma, _ in pts:
        if t < t_b and not (t == t_a and sigma == sigma_a):
            assert sigma < lo or hi < sigma, "extra crossing inside the crossbar arc"
    return TConfiguration(frame, j_lo, j_hi, sigma_a, t_a, a_pt, sigma_b, t_b, b_pt)


def _first_catastrophe(frame: Frame, x_lo: Surd, x_hi: Surd) -> Surd:
    """Smallest positive leg time whose lattice point has crossbar offset in
    [x_lo, x_hi]: the moment the swept segment lands inside a crossbar lift."""
    zero = Surd(0, 0, x_lo.D)
    t_hi = Surd(4, 0, x_lo.D)
    for _ in range(60):
        best = None
        for m, n in frame.lattice_in_box(x_lo, x_hi, zero, t_hi):
            x, t = frame.lattice_coords(m, n)
            if t.sign() <= 0:
                continue
            if best is None or t < best:
                best = t
        if best is not None:
            return best
        t_hi = t_hi * 4
    raise ConstructionWindowTooSmall("sweep found no catastrophe time")


def build_qmp(cfg: TConfiguration) -> TorusPartition:
    """The two-piece quasi-Markov partition spanned by a T-configuration."""
    sigma_neg = surd_min(cfg.sigma_a, cfg.sigma_b)
    sigma_pos = surd_max(cfg.sigma_a, cfg.sigma_b)
    zero = Surd(0, 0, sigma_neg.D)
    # sweeping [sigma_neg, 0] in the leg direction ends on a crossbar lift
    # whose offset x puts [sigma_neg + x, x] inside [sigma_neg, sigma_pos]
    t_left = _first_catastrophe(cfg.frame, -sigma_pos, zero)
    t_right = _first_catastrophe(cfg.frame, zero, -sigma_neg)
    left = Rect(sigma_neg, zero, zero, t_left)
    right = Rect(zero, sigma_pos, zero, t_right)
    return TorusPartition(cfg.frame, (left, right), QMP)


def convert_rect(rect: Rect, frame_from: Frame, frame_to: Frame) -> Rect:
    corners = [
        frame_to.to_frame(*frame_from.to_plane(u, s))
        for u in (rect.u0, rect.u1)
        for s in (rect.s0, rect.s1)
    ]
    us = [c[0] for c in corners]
    ss = [c[1] for c in corners]
    out = Rect(min(us), max(us), min(ss), max(ss))
    # frames must be axis-aligned up to sign and swap for this to be exact
    assert set(corners) == {
        (u, s) for u in (out.u0, out.u1) for s in (out.s0, out.s1)
    }, "rectangle does not stay axis-aligned between these frames"
    return out


def convert_partition(P: TorusPartition, frame_to: Frame) -> TorusPartition:
    return TorusPartition(
        frame_to, tuple(convert_rect(pc, P.frame, frame_to) for pc in P.pieces), P.kind
    )


# -- the vertex pre-Markov partitions of the bi-infinite sequence -------------


@dataclass(frozen=True)
class VertexPreMp:
    """Member (side, k, l) of the nested sequence of simplest preMps."""

    side: str  # '+u', '+s', '-u', '-s'
    k: int
    l: int
    a_point: tuple[int, int]
    b_point: tuple[int, int]
    t_a: Surd
    t_b: Surd
    x_a: Surd
    x_b: Surd
    partition: TorusPartition
    ptype: str  # 'island' | 'parquet'


def _convergent_pair(cf: CFExpansion, k: int) -> tuple[int, int]:
    if k == -2:
        return (0, 1)
    if k == -1:
        return (1, 0)
    p1, q1, p2, q2 = 1, 0, 0, 1
    for i in range(k + 1):
        a = cf.digit(i)
        p1, q1, p2, q2 = a * p1 + p2, a * q1 + q2, p1, q1
    return p1, q1


def _slope_cf(eig: EigenData, axis: str) -> CFExpansion:
    return expand(eig.kappa if axis == "u" else eig.kappa_s)


def vertex_premp(A: MatZ2, side: str, k: int, l: int) -> VertexPreMp:
    """Construct the (k, l) entry of the given broad class, exactly.

    The crossing points are the k-th convergent and the (k, l) intermediate
    fraction of the relevant eigen-slope; the two pieces have bases on the
    crossbar with heights exchanged between A and B.
    """
    if side not in ("+u", "-u", "+s", "-s"):
        raise ValueError(f"unknown broad class {side!r}")
    eig = eigen_data(A)
    fr = eigenframe(eig)
    axis = side[1]
    cf = _slope_cf(eig, axis)
    b_next = cf.digit(k + 1)
    if not 1 <= l <= b_next:
        raise WindowError(f"l={l} outside 1..{b_next} for k={k}")
    pk = _convergent_pair(cf, k)
    pk1 = _convergent_pair(cf, k - 1)
    a_pt = pk
    b_pt = (l * pk[0] + pk1[0], l * pk[1] + pk1[1])

    def leg_and_bar(pt):
        u, s = fr.lattice_coords(*pt)
        return (u, -s) if axis == "u" else (s, -u)

    t_a, x_a = leg_and_bar(a_pt)
    if t_a.sign() < 0:
        a_pt = (-a_pt[0], -a_pt[1])
        t_a, x_a = leg_and_bar(a_pt)
    t_b, x_b = leg_and_bar(b_pt)
    if t_b.sign() < 0:
        b_pt = (-b_pt[0], -b_pt[1])
        t_b, x_b = leg_and_bar(b_pt)
    if t_a.sign() <= 0 or t_b.sign() <= 0 or x_a.sign() * x_b.sign() >= 0:
        raise WindowError(f"entry (k={k}, l={l}) degenerates outside the window")
    if not t_a < t_b:
        # the construction requires the crossings in time order 0 < t_A < t_B
        raise WindowError(f"entry (k={k}, l={l}) has its crossings out of order")

    zero = Surd(0, 0, eig.D)
    if axis == "u":
        piece_a = rect_between(zero, t_b, zero, x_a)
        piece_b = rect_between(zero, t_a, zero, x_b)
    else:
        piece_a = rect_between(zero, x_a, zero, t_b)
        piece_b = rect_between(zero, x_b, zero, t_a)
    if side[0] == "-":
        minus = Surd(-1, 0, eig.D)
        piece_a = piece_a.scale(minus, minus)
        piece_b = piece_b.scale(minus, minus)

    ptype = "island" if l == b_next else "parquet"
    abs_xa = x_a if x_a.sign() > 0 else -x_a
    abs_xb = x_b if x_b.sign() > 0 else -x_b
    assert (abs_xa > abs_xb) == (ptype == "island"), "type formula vs base comparison"
    partition = TorusPartition(fr, (piece_a, piece_b), PREMP)
    return VertexPreMp(side, k, l, a_pt, b_pt, t_a, t_b, x_a, x_b, partition, ptype)


def classify_type(entry: VertexPreMp) -> str:
    return entry.ptype


def _positions_from(cf: CFExpansion, k0: int, l0: int):
    k, l = k0, l0
    while True:
        yield k, l
        l += 1
        if l > cf.digit(k + 1):
            k, l = k + 1, 1


def enumerate_vertex_premps(
    A: MatZ2,
    count: int | None = None,
    sides: tuple[str, ...] = ("+u", "+s", "-u", "-s"),
    validate: bool = True,
) -> dict[str, list[VertexPreMp]]:
    """Consecutive valid entries of the sequence, per broad class.

    Enumeration starts at the first (k, l) from k = -1 on whose entry passes
    the exact validator (disjoint, unit area, conditions I and III); the
    default window is two full periods of the slope's expansion.
    """
    if not is_hyperbolic(A):
        raise NotHyperbolic(f"{A} is not hyperbolic")
    eig = eigen_data(A)
    out: dict[str, list[VertexPreMp]] = {}
    for side in sides:
        cf = _slope_cf(eig, side[1])
        n = count if count is not None else 2 * sum(cf.period)
        entries: list[VertexPreMp] = []
        start = None
        for k, l in _positions_from(cf, -1, 1):
            if start is None and k > 8:
                raise WindowError(f"no valid starting entry found for side {side}")
            try:
                e = vertex_premp(A, side, k, l)
            except WindowError:
                if start is not None:
                    raise
                continue
            if validate:
                rep = validate_partition(e.partition, PREMP, autom=A, vertex=True)
                if not rep.ok:
                    if start is not None:
                        raise WindowError(
                            f"entry ({k},{l}) of side {side} failed inside the window: "
                            + "; ".join(rep.failures)
                        )
                    continue
            if start is None:
                start = (k, l)
            entries.append(e)
            if len(entries) >= n:
                break
        out[side] = entries
    return out


def count_classes(A: MatZ2) -> dict[str, int]:
    """Theorem-1 counts: 2*(period digit sum) total, 2*(period length) islands."""
    if not is_hyperbolic(A):
        raise NotHyperbolic(f"{A} is not hyperbolic")
    cf = expand(eigen_data(A).kappa)
    S = sum(cf.period)
    L = len(cf.period)
    return {"total": 2 * S, "island": 2 * L, "parquet": 2 * (S - L)}


# -- refinement and the transition multigraph ---------------------------------


def refine(P: TorusPartition, A: MatZ2, backward: bool = False) -> TorusPartition:
    """Closures of the components of A(P_i°) ∩ P_j° (or of A^{-1}P_i° ∩ P_j°)."""
    eig = eigen_data(A)
    assert P.frame == eigenframe(eig), "refine needs the eigenframe"
    new = []
    for pc in P.pieces:
        img = pc.scale(
            eig.lambda_u.inverse() if backward else eig.lambda_u,
            eig.lambda_s.inverse() if backward else eig.lambda_s,
        )
        for pj in P.pieces:
            for m, n in overlap_translates(P.frame, img, pj):
                du, ds = P.frame.lattice_coords(m, n)
                r = img.intersect(pj.translate(du, ds))
                assert r is not None
                new.append(r)
    return TorusPartition(P.frame, tuple(new), STRMP)


@dataclass(frozen=True)
class TransitionGraph:
    """Oriented multigraph over pieces: one edge per overlapping translate."""

    n_vertices: int
    edges: tuple[tuple[int, int, tuple[int, int]], ...]

    def vertex_matrix(self) -> list[list[int]]:
        M = [[0] * self.n_vertices for _ in range(self.n_vertices)]
        for i, j, _ in self.edges:
            M[i][j] += 1
        return M

    def edge_adjacency(self) -> list[list[int]]:
        E = len(self.edges)
        M = [[0] * E for _ in range(E)]
        for p, (_, j, _) in enumerate(self.edges):
            for q, (i2, _, _) in enumerate(self.edges):
                if j == i2:
                    M[p][q] = 1
        return M

    def strongly_connected(self) -> bool:
        adj = self.vertex_matrix()
        for mat in (adj, [list(col) for col in zip(*adj)]):
            seen = {0}
            stack = [0]
            while stack:
                v = stack.pop()
                for w in range(self.n_vertices):
                    if mat[v][w] and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != self.n_vertices:
                return False
        return True


def transition_graph(P: TorusPartition, A: MatZ2) -> TransitionGraph:
    eig = eigen_data(A)
    assert P.frame == eigenframe(eig)
    edges = []
    for i, pc in enumerate(P.pieces):
        img = pc.scale(eig.lambda_u, eig.lambda_s)
        for j, pj in enumerate(P.pieces):
            for t in overlap_translates(P.frame, img, pj):
                edges.append((i, j, t))
    edges.sort()
    return TransitionGraph(len(P.pieces), tuple(edges))


# -- edge-type partitions: vertex partitions shifted to other fixpoints -------


def edge_type_shifts(A: MatZ2, base: VertexPreMp) -> list[tuple[tuple[Fraction, Fraction], TorusPartition]]:
    """All shifts of the base entry placing fixpoints on both boundary
    segments: one per fixpoint-lattice point in the joint-segment box."""
    if not is_hyperbolic(A):
        raise NotHyperbolic(f"{A} is not hyperbolic")
    if base.side != "+u":
        raise ValueError("edge-type enumeration is implemented for '+u' bases")
    eig = eigen_data(A)
    fr = base.partition.frame
    D = eig.D
    t_c = base.t_a + base.t_b
    bar_lo = surd_min(base.x_a, base.x_b)
    bar_hi = surd_max(base.x_a, base.x_b)

    n_det = (A.a - 1) * (A.d - 1) - A.b * A.c
    out = []
    for m, n in _lattice_box_image(A, fr, -t_c, Surd(0, 0, D), bar_lo, bar_hi):
        # g = (A - I)^{-1} (m, n), a fixpoint-lattice point
        gx = Fraction((A.d - 1) * m - A.b * n, n_det)
        gy = Fraction(-A.c * m + (A.a - 1) * n, n_det)
        ug, sg = fr.to_frame(Surd(gx, 0, D), Surd(gy, 0, D))
        # leg parameter tau = -u(g) in [0, t_c); crossbar sigma = s(g) interior
        if not (ug.sign() <= 0 and -t_c < ug):
            continue
        if not (bar_lo < sg and sg < bar_hi):
            continue
        shifted = TorusPartition(
            fr,
            tuple(pc.translate(Surd(0, 0, D), -sg) for pc in base.partition.pieces),
            PREMP,
        )
        out.append(((gx % 1, gy % 1), shifted))
    out.sort(key=lambda it: (it[0][0], it[0][1]))
    return out


def _lattice_box_image(A: MatZ2, fr: Frame, u0, u1, s0, s1):
    """Integer pairs (m, n) = (A - I) g over frame-box corners g."""
    corners = [fr.to_plane(u, s) for u in (u0, u1) for s in (s0, s1)]
    ms = []
    ns = []
    for x, y in corners:
        ms.append((A.a - 1) * x + A.b * y)
        ns.append(A.c * x + (A.d - 1) * y)
    for m in range(ceil_surd(min(ms)) - 1, max(ms).floor() + 2):
        for n in range(ceil_surd(min(ns)) - 1, max(ns).floor() + 2):
            yield m, n


# -- the counterexample to naive transitivity (15) ----------------------------


@dataclass(frozen=True)
class Counterexample15:
    """Three parallelograms with A P1 ∩ P2 ≠ ∅, A P2 ∩ P3 ≠ ∅ but
    A² P1 ∩ P3 = ∅ (hence the triple intersection is empty too)."""

    frame: Frame
    p1: Rect
    p2: Rect
    p3: Rect
    checks: dict[str, bool]


def _torus_overlap_closed(fr: Frame, a: Rect, b: Rect) -> bool:
    return bool(overlap_translates(fr, a, b, closed=True))


def _inside_centered_square(fr: Frame, r: Rect, strict_u_sign: int | None = None) -> bool:
    half = Fraction(1, 2)
    for u in (r.u0, r.u1):
        for s in (r.s0, r.s1):
            x, y = fr.to_plane(u, s)
            if not ((-x - half).sign() < 0 and (x - half).sign() < 0):
                return False
            if not ((-y - half).sign() < 0 and (y - half).sign() < 0):
                return False
    if strict_u_sign is not None:
        for u in (r.u0, r.u1):
            if u.sign() * strict_u_sign < 0:
                return False
    return True


def counterexample_15(A: MatZ2) -> Counterexample15:
    """Construct the three-piece fixture near the origin fixpoint, shrinking
    until every containment holds, then verify the intersection pattern."""
    eig = eigen_data(A)
    if eig.lambda_u.sign() <= 0 or eig.lambda_s.sign() <= 0:
        raise ValueError("the fixture needs positive lambda and mu")
    fr = eigenframe(eig)
    lam, mu = eig.lambda_u, eig.lambda_s
    D = eig.D
    delta = Surd(Fraction(1, 4), 0, D)
    lam2 = lam * lam
    for _ in range(40):
        p1 = Rect(-delta / lam2, Surd(0, 0, D), -delta, delta)
        p2 = Rect(Surd(0, 0, D), delta / lam, -delta, delta)
        ap2 = p2.scale(lam, mu)
        p3 = Rect(ap2.u1 / 2, ap2.u1, ap2.s0 / 2, ap2.s1 / 2)
        good = (
            _inside_centered_square(fr, p1, -1)
            and _inside_centered_square(fr, p1.scale(lam, mu), -1)
            and _inside_centered_square(fr, p1.scale(lam2, mu * mu), -1)
            and _inside_centered_square(fr, p2, +1)
            and _inside_centered_square(fr, p3, +1)
            and p3.u0.sign() > 0
        )
        if good:
            break
        delta = delta / 2
    else:
        raise ConstructionWindowTooSmall("could not fit the fixture near the origin")

    ap1 = p1.scale(lam, mu)
    aap1 = p1.scale(lam2, mu * mu)
    checks = {
        "A_p1_contains_origin": ap1.contains_point(Surd(0, 0, D), Surd(0, 0, D)),
        "A_p1_meets_p2": _torus_overlap_closed(fr, ap1, p2),
        "A_p2_meets_p3": _torus_overlap_closed(fr, ap2, p3),
        "A2_p1_misses_p3": not _torus_overlap_closed(fr, aap1, p3),
        "triple_empty": not _triple_overlap_closed(fr, aap1, ap2, p3),
    }
    return Counterexample15(fr, p1, p2, p3, checks)


def _triple_overlap_closed(fr: Frame, a: Rect, b: Rect, c: Rect) -> bool:
    for m, n in overlap_translates(fr, a, b, closed=True):
        du, ds = fr.lattice_coords(m, n)
        bs = b.translate(du, ds)
        lo_u, hi_u = surd_max(a.u0, bs.u0), surd_min(a.u1, bs.u1)
        lo_s, hi_s = surd_max(a.s0, bs.s0), surd_min(a.s1, bs.s1)
        # closed intersection may be degenerate; test c against the closed box
        for m2, n2 in fr.lattice_in_box(lo_u - c.u1, hi_u - c.u0, lo_s - c.s1, hi_s - c.s0):
            du2, ds2 = fr.lattice_coords(m2, n2)
            cs = c.translate(du2, ds2)
            if (
                not (hi_u < cs.u0 or cs.u1 < lo_u)
                and not (hi_s < cs.s0 or cs.s1 < lo_s)
            ):
                return True
    return False
