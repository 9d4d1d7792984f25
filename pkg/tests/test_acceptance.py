"""Acceptance suite: one test per criterion, each printing its own pass line.

Every check is exact apart from the two advertised float cross-checks: the
1e-9 Perron agreement and the 10% mixing deviation.
"""

import random
import time
from fractions import Fraction

from torux import (
    CFExpansion,
    Cylinder,
    MatZ2,
    MeasureSpec,
    Surd,
    arc_F_N,
    best_approx_one_sided,
    best_approx_two_sided,
    canonical_period,
    centralizer_generator,
    check_diagram,
    count_classes,
    counterexample_15,
    cylinder_measure,
    doubling_code,
    doubling_decode,
    edge_type_shifts,
    eigen_data,
    encode_point,
    encode_point_naive,
    enumerate_vertex_premps,
    entropy,
    expand,
    fair_coin,
    fixpoint_count,
    from_form,
    generators,
    map_partition,
    markov_from_graph,
    mixing_report,
    refine,
    self_conjugator_shift,
    shift_preimage,
    to_form,
    transition_graph,
    validate_partition,
)
from torux.conjugacy import conjugate_by
from torux.geometry import Rect
from torux.partitions import PREMP, QMP, STRMP, TorusPartition, eigenframe
from torux.qfield import Surd as _S

from conftest import brute_one_sided, brute_two_sided, random_hyperbolic, random_surd
from test_partitions import _brute_edge_type_count

GOLDEN = MatZ2(2, 1, 1, 1)
FIG4 = MatZ2(3, 2, 1, 1)


def _report(name, t0, limit=None):
    dt = time.perf_counter() - t0
    if limit is not None:
        assert dt < limit, f"{name} took {dt:.2f}s, limit {limit}s"
    print(f"PASS {name} ({dt:.2f}s)")


def test_c01_golden_mean_classification():
    t0 = time.perf_counter()
    eig = eigen_data(GOLDEN)
    assert eig.kappa == Surd(Fraction(1, 2), Fraction(1, 2), 5)
    assert expand(eig.kappa) == CFExpansion((), (1,))
    assert count_classes(GOLDEN) == {"total": 2, "island": 2, "parquet": 0}
    _report("C01 golden-mean classification", t0, limit=1.0)


def test_c02_fig4_reproduction():
    t0 = time.perf_counter()
    eig = eigen_data(FIG4)
    assert canonical_period(expand(eig.kappa)) == (1, 2)
    assert count_classes(FIG4) == {"total": 6, "island": 4, "parquet": 2}
    entries = enumerate_vertex_premps(FIG4, count=9, sides=("+u",))["+u"]
    pattern = "".join("I" if e.ptype == "island" else "P" for e in entries)
    assert "PII" in pattern + pattern and pattern.count("P") == 3
    sigs = [e.partition.signature() for e in entries]
    assert map_partition(entries[0].partition, eig).signature() == sigs[3]
    _report("C02 Fig.4 reproduction: period (1,2), counts {6,4,2}, shift 3", t0, limit=5.0)


def test_c03_self_conjugacy_witness():
    t0 = time.perf_counter()
    C1, C2, _ = generators()
    w = self_conjugator_shift(GOLDEN)
    assert w.matrix == C2 @ C1.inverse()
    assert w.det == -1
    assert w.matrix @ GOLDEN @ w.matrix.inverse() == GOLDEN
    _report("C03 self-conjugacy witness C2*C1^-1", t0)


def test_c04_centralizer_square_root():
    t0 = time.perf_counter()
    B = centralizer_generator(GOLDEN)
    assert B @ B == GOLDEN
    _report("C04 centralizer generator with B^2 = A", t0)


def test_c05_theorem2_oracle_equivalence():
    t0 = time.perf_counter()
    rng = random.Random(1729)
    targets = [
        Surd(Fraction(1, 2), Fraction(1, 2), 5),  # golden
        Surd(0, 1, 2),  # sqrt(2)
        Surd(1, 1, 3),  # 1 + sqrt(3)
    ] + [random_surd(rng) for _ in range(10)]
    key = lambda t: (t[1], t[2] != "below")
    for w in targets:
        got_one = sorted(((c.p, c.q, c.side) for c in best_approx_one_sided(w, 2000)), key=key)
        assert got_one == sorted(brute_one_sided(w, 2000), key=key)
        got_two = [(c.p, c.q, c.side) for c in best_approx_two_sided(w, 2000)]
        assert got_two == brute_two_sided(w, 2000)
    _report("C05 Theorem 2 oracle equivalence (13 targets, q <= 2000)", t0, limit=30.0)


def test_c06_statement_b():
    t0 = time.perf_counter()
    rng = random.Random(271828)
    C = generators()
    from torux import apply_T

    for _ in range(100):
        A = random_hyperbolic(rng)
        kappa = eigen_data(A).kappa
        for i in (1, 2, 3):
            B = conjugate_by(C[i - 1], A)
            assert eigen_data(B).kappa == apply_T(i, kappa)
    _report("C06 statement b): kappa of C_i A C_i^-1 = T_i(kappa), 100 matrices", t0)


def test_c07_quadratic_form_correspondence():
    t0 = time.perf_counter()
    rng = random.Random(314159)
    C1 = MatZ2(1, 1, 0, 1)
    L = MatZ2(1, 0, 1, 1)
    for _ in range(500):
        X = random_hyperbolic(rng)
        assert to_form(X).disc == X.trace**2 - 4 * X.det
        g = MatZ2.identity()
        for _ in range(3):
            g = g @ rng.choice([C1, C1.inverse(), L, L.inverse()])
        assert g.det == 1
        assert check_diagram(g, X)
        assert from_form(to_form(X), X.trace, X.det) == X
    _report("C07 form correspondence: disc identity, diagram, inversion (500 pairs)", t0)


def test_c08_partition_validators():
    t0 = time.perf_counter()
    e = enumerate_vertex_premps(GOLDEN, count=1, sides=("+u",))["+u"][0]
    rep = validate_partition(e.partition, PREMP, autom=GOLDEN, vertex=True)
    assert rep.ok and rep.checks["condition_I"] and rep.checks["condition_III"]
    # no single-parallelogram quasi-Markov partition validates
    fr = eigenframe(eigen_data(GOLDEN))
    det = fr.det()
    absdet = det if det.sign() > 0 else -det
    for w in (Fraction(1, 2), Fraction(1, 3), Fraction(3, 4)):
        width = _S(w, 0, 5)
        cand = TorusPartition(fr, (Rect(_S(0, 0, 5), width, _S(0, 0, 5), (width * absdet).inverse()),), QMP)
        assert cand.area_standard() == 1
        assert not validate_partition(cand, QMP).ok
    R = refine(e.partition, GOLDEN)
    rep2 = validate_partition(R, STRMP, autom=GOLDEN)
    assert rep2.ok and rep2.checks["condition_II"]
    import math

    assert len(R.pieces) >= math.ceil(float(eigen_data(GOLDEN).lambda_u))
    _report("C08 partition validators: I & III pass, no 1-piece qMp, refine is strict", t0)


def test_c09_entropy_certificates():
    t0 = time.perf_counter()
    for A in (GOLDEN, FIG4):
        e = enumerate_vertex_premps(A, count=1, sides=("+u",))["+u"][0]
        cert = entropy(markov_from_graph(transition_graph(e.partition, A)), eigen_data(A).lambda_u)
        assert cert.exact_eigenvalue, "det(M - lambda I) must vanish exactly"
        assert cert.agreement <= 1e-9
    _report("C09 entropy certificates for golden and Fig.4 matrices", t0, limit=5.0)


def test_c10_counterexample_to_15():
    t0 = time.perf_counter()
    fx = counterexample_15(GOLDEN)
    assert fx.checks == {
        "A_p1_contains_origin": True,
        "A_p1_meets_p2": True,
        "A_p2_meets_p3": True,
        "A2_p1_misses_p3": True,
        "triple_empty": True,
    }
    e = enumerate_vertex_premps(GOLDEN, count=1, sides=("+u",))["+u"][0]
    R = refine(e.partition, GOLDEN)
    w14 = set(encode_point(R, GOLDEN, Fraction(0), Fraction(0), 1))
    w13 = set(encode_point_naive(R, GOLDEN, Fraction(0), Fraction(0), 1))
    assert w14 < w13
    _report("C10 counterexample to (15); closure coding strictly refines naive", t0)


def test_c11_part1_exactness():
    t0 = time.perf_counter()
    seq = doubling_code(Fraction(1, 3)).sequence
    prev = (Fraction(0), Fraction(1))
    for N in range(61):
        lo, hi = arc_F_N(seq.prefix(N + 1))
        assert hi - lo == Fraction(1, 2 ** (N + 1))
        assert prev[0] <= lo and hi <= prev[1]
        prev = (lo, hi)
    rng = random.Random(8128)
    for _ in range(100):
        k = rng.randint(0, 6)
        idx = rng.sample(range(12), k)
        c = Cylinder(tuple((i, rng.randint(0, 1)) for i in idx))
        p0 = Fraction(rng.randint(0, 17), 17)
        for m in (fair_coin(), MeasureSpec((p0, 1 - p0))):
            assert cylinder_measure(shift_preimage(c), m) == cylinder_measure(c, m)
    for _ in range(1000):
        x = Fraction(rng.randint(0, 9999), rng.randint(1, 10000))
        x -= int(x)
        assert doubling_decode(doubling_code(x).sequence) == x
    _report("C11 Part-1 exactness: arcs to N=60, invariance, 1000 round trips", t0)


def test_c12_mixing_statistical():
    t0 = time.perf_counter()
    report = mixing_report(GOLDEN, grid=512, iters=3, rect=(0, Fraction(1, 2), 0, Fraction(1, 2)))
    assert report["mes_y"] >= 0.25
    assert report["deviation"] <= 0.10, report
    _report(f"C12 mixing: |overlap/mes Y - mes X| = {report['deviation']:.4f} <= 0.10", t0, limit=10.0)


def test_c13_edge_type_enumeration():
    t0 = time.perf_counter()
    A2 = GOLDEN @ GOLDEN
    base = enumerate_vertex_premps(A2, count=1, sides=("+u",))["+u"][0]
    shifts = edge_type_shifts(A2, base)
    assert len(shifts) == _brute_edge_type_count(A2, base)
    _report(f"C13 edge-type enumeration: {len(shifts)} shifts match the lattice count", t0)
