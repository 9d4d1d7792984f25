from fractions import Fraction

import pytest

from torux import (
    CFExpansion,
    MatZ2,
    RationalInput,
    apply_T,
    apply_T_cf,
    best_approx_one_sided,
    best_approx_two_sided,
    canonical_period,
    convergents,
    eigen_data,
    evaluate,
    expand,
    semiconvergent,
)
from torux.qfield import Surd

from conftest import brute_one_sided, brute_two_sided, random_surd, surd_pqa_digits

PHI = Surd(Fraction(1, 2), Fraction(1, 2), 5)


def test_expand_examples():
    assert expand(PHI) == CFExpansion((), (1,))
    x = Surd(Fraction(-1, 2), Fraction(1, 2), 3)  # (sqrt(3) - 1)/2
    assert expand(x) == CFExpansion((0,), (2, 1))
    y = Surd(1, 1, 3)  # 1 + sqrt(3): digits 2,1,2,1,... (purely periodic)
    assert expand(y) == CFExpansion((), (2, 1))
    assert expand(y).digits(6) == [2, 1, 2, 1, 2, 1]


def test_expand_matches_integer_oracle(rng):
    for _ in range(60):
        x = random_surd(rng)
        if not (x > 1):
            x = x - x.floor() + 1  # shift into (1, 2) range keeps digits generic
        cf = expand(x)
        assert cf.digits(12) == surd_pqa_digits(x, 12)


def test_expand_rejects_rational():
    with pytest.raises(RationalInput):
        expand(Surd(Fraction(3, 7), 0, 5))


def test_lagrange_period_found_with_small_state(rng):
    import math

    for _ in range(40):
        x = random_surd(rng)
        cf = expand(x)
        assert len(cf.period) >= 1
        # the complete-quotient state repeats within a bound linear in the
        # effective radicand (q*r)^2 * D of the normalized triple
        r = math.lcm(x.a.denominator, x.b.denominator)
        n_eff = (abs(x.b.numerator) * r) ** 2 * x.D
        assert len(cf.preperiod) + len(cf.period) <= 3 * n_eff + 60


def test_lagrange_bound_for_eigen_slopes(rng):
    from conftest import random_hyperbolic

    for _ in range(25):
        A = random_hyperbolic(rng)
        e = eigen_data(A)
        cf = expand(e.kappa)
        assert len(cf.preperiod) + len(cf.period) <= 2 * e.D * A.c * A.c + 40


def test_evaluate_examples():
    assert evaluate(CFExpansion((), (1,))) == Surd(Fraction(1, 2), Fraction(1, 2), 5)
    assert evaluate(CFExpansion((), (2,))) == Surd(1, Fraction(1, 2), 8)  # 1 + sqrt(2)
    v = evaluate(CFExpansion((0,), (2, 1)), radicand=3)
    assert v == Surd(Fraction(-1, 2), Fraction(1, 2), 3)


def test_round_trips(rng):
    for _ in range(80):
        x = random_surd(rng)
        cf = expand(x)
        assert evaluate(cf).with_radicand(x.D) == x
    for pre, per in [((), (1,)), ((3, 2), (1, 4)), ((-2, 1), (5,)), ((0,), (2, 1))]:
        cf = CFExpansion(pre, per)
        assert expand(evaluate(cf)) == cf


def test_canonical_form():
    # non-primitive periods reduce, absorbable preperiods shrink
    assert CFExpansion((), (1, 2, 1, 2)) == CFExpansion((), (1, 2))
    assert CFExpansion((1,), (1,)) == CFExpansion((), (1,))
    assert CFExpansion((0, 2), (1, 2)) == CFExpansion((0,), (2, 1))


def test_canonical_period():
    assert canonical_period(CFExpansion((), (2, 1))) == (1, 2)
    assert canonical_period(CFExpansion((), (1,))) == (1,)
    assert canonical_period(CFExpansion((), (1, 2, 1, 2))) == (1, 2)


def test_apply_T_examples():
    golden_cf = CFExpansion((), (1,))
    assert apply_T_cf(1, golden_cf) == CFExpansion((2,), (1,))
    t2 = apply_T(2, PHI)
    assert t2 == Surd(Fraction(-1, 2), Fraction(1, 2), 5)
    assert apply_T_cf(2, golden_cf) == CFExpansion((0,), (1,)) == expand(t2)
    y = Surd(1, 1, 3)
    assert apply_T_cf(3, expand(y)) == expand(-y)


def test_apply_T_zero():
    with pytest.raises(ZeroDivisionError):
        apply_T(2, Surd(0, 0, 5))


def test_T_coherence_randomized(rng):
    checked = 0
    nonpos_head = 0
    while checked < 1000:
        x = random_surd(rng)
        cf = expand(x)
        if x.floor() <= 0:
            nonpos_head += 1
        for i in (1, 2, 3):
            assert apply_T_cf(i, cf) == expand(apply_T(i, x)), (i, str(x))
            checked += 1
    assert nonpos_head > 50  # the a0 <= 0 branches are genuinely exercised


def test_T_involutions(rng):
    for _ in range(100):
        x = random_surd(rng)
        cf = expand(x)
        assert apply_T_cf(3, apply_T_cf(3, cf)) == cf
        assert apply_T_cf(2, apply_T_cf(2, cf)) == cf
        assert apply_T_cf(1, cf).digit(0) == cf.digit(0) + 1


def _finite_cf_value(digits):
    v = Fraction(digits[-1])
    for d in reversed(digits[:-1]):
        v = d + 1 / v
    return v


def test_convergents_examples():
    golden = CFExpansion((), (1,))
    cs = convergents(golden, 5)
    assert [(c.p, c.q) for c in cs] == [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5)]
    for i, c in enumerate(cs):
        assert Fraction(c.p, c.q) == _finite_cf_value(golden.digits(i + 1))
    sqrt2 = expand(Surd(0, 1, 2))
    assert [(c.p, c.q) for c in convergents(sqrt2, 4)] == [(1, 1), (3, 2), (7, 5), (17, 12)]
    assert convergents(sqrt2, 1)[0] == convergents(sqrt2, 1)[0].__class__(1, 1, "below")


def test_convergent_sides_alternate():
    cs = convergents(CFExpansion((), (1,)), 8)
    sides = [c.side for c in cs]
    assert sides == ["below", "above"] * 4


def test_identity_24(rng):
    for _ in range(30):
        x = random_surd(rng)
        cf = expand(x)
        for k in range(0, 5):
            b_next = cf.digit(k + 1)
            for l in range(1, b_next + 1):
                p, q = semiconvergent(cf, k, l)
                assert Fraction(p, q) == _finite_cf_value(cf.digits(k + 1) + [l])


def _as_triples(convs):
    return sorted(((c.p, c.q, c.side) for c in convs), key=lambda t: (t[1], t[2] != "below"))


def test_one_sided_examples():
    got = _as_triples(best_approx_one_sided(PHI, 5))
    assert got == sorted(brute_one_sided(PHI, 5), key=lambda t: (t[1], t[2] != "below"))
    assert [(p, q) for p, q, _ in got] == [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5)]
    sq = Surd(1, 1, 2)  # 1 + sqrt(2) = [2;(2)]
    got = _as_triples(best_approx_one_sided(sq, 5))
    assert got == sorted(brute_one_sided(sq, 5), key=lambda t: (t[1], t[2] != "below"))
    assert ((2, 1, "below") in got) and ((3, 1, "above") in got)
    assert ((5, 2, "above") in got) and ((12, 5, "below") in got)


def test_one_sided_q1_head(rng):
    for _ in range(20):
        w = random_surd(rng)
        got = [(c.p, c.q, c.side) for c in best_approx_one_sided(w, 1)]
        fl = w.floor()
        assert got == [(fl, 1, "below"), (fl + 1, 1, "above")]


def test_two_sided_examples():
    got = [(c.p, c.q) for c in best_approx_two_sided(PHI, 5)]
    assert got == [(2, 1), (3, 2), (5, 3), (8, 5)]
    got = [(c.p, c.q) for c in best_approx_two_sided(Surd(0, 1, 2), 12)]
    assert got == [(1, 1), (3, 2), (7, 5), (17, 12)]


def test_two_sided_subset_of_one_sided(rng):
    for _ in range(15):
        w = random_surd(rng)
        one = {(c.p, c.q) for c in best_approx_one_sided(w, 120)}
        two = [(c.p, c.q) for c in best_approx_two_sided(w, 120)]
        assert set(two) <= one


def test_oracle_equivalence_small(rng):
    targets = [PHI, Surd(0, 1, 2), Surd(1, 1, 3)] + [random_surd(rng) for _ in range(6)]
    for w in targets:
        assert _as_triples(best_approx_one_sided(w, 150)) == sorted(
            brute_one_sided(w, 150), key=lambda t: (t[1], t[2] != "below")
        )
        assert [(c.p, c.q, c.side) for c in best_approx_two_sided(w, 150)] == brute_two_sided(w, 150)


def test_cf_str():
    assert str(CFExpansion((), (1,))) == "[(1)]"
    assert str(CFExpansion((2,), (1, 3))) == "[2; (1, 3)]"
    assert str(CFExpansion((-1, 2, 3), (4,))) == "[-1; 2, 3, (4)]"
    # an absorbable preperiod canonicalizes into the purely periodic form
    assert str(CFExpansion((2,), (1, 2))) == "[(2, 1)]"
