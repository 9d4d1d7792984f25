"""GL(2,Z) / SL(2,Z) conjugacy of hyperbolic matrices.

The classifier is the continued-fraction period of the unstable slope; the
witness construction walks each matrix down to the purely periodic slope by
generator conjugations and composes the two walks.  The Gauss correspondence
with binary quadratic forms is implemented as the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cfrac import canonical_period, expand
from .gl2z import MatZ2, NotHyperbolic, eigen_data, generators, is_hyperbolic
from .qfield import Surd


class NotConjugate(ValueError):
    """Raised when a conjugator is requested for a non-conjugate pair."""


Word = tuple[tuple[int, int], ...]  # ((generator index, exponent), ...)


def eval_word(word: Word) -> MatZ2:
    C = generators()
    out = MatZ2.identity()
    for i, e in word:
        out = out @ (C[i - 1] ** e)
    return out


def invert_word(word: Word) -> Word:
    return tuple((i, -e) for i, e in reversed(word))


@dataclass(frozen=True)
class ConjugacyWitness:
    """A word in C1, C2, C3 whose matrix C satisfies B = C A C^{-1}."""

    word: Word
    matrix: MatZ2

    @property
    def det(self) -> int:
        return self.matrix.det

    def verifies(self, A: MatZ2, B: MatZ2) -> bool:
        return self.matrix @ A @ self.matrix.inverse() == B


def conjugate_by(C: MatZ2, A: MatZ2) -> MatZ2:
    return C @ A @ C.inverse()


def _is_reduced(kappa: Surd) -> bool:
    # purely periodic CF <=> kappa > 1 and galois conjugate in (-1, 0)
    g = kappa.galois_conjugate()
    return kappa > 1 and (-1) < g and g < 0


def _reduction_walk(A: MatZ2) -> tuple[Word, MatZ2, Surd]:
    """Conjugate A until its slope is purely periodic.

    Each step replaces kappa by 1/(kappa - floor(kappa)), i.e. conjugates by
    C2 C1^{-a0}; the walk ends after preperiod-many steps.
    """
    word: list[tuple[int, int]] = []
    cur = A
    kappa = eigen_data(A).kappa
    steps = 0
    while not _is_reduced(kappa):
        a0 = kappa.floor()
        step: Word = ((2, 1), (1, -a0))
        cur = conjugate_by(eval_word(step), cur)
        kappa = (kappa - a0).inverse()
        word = list(step) + word
        steps += 1
        assert steps < 10_000, "reduction walk failed to reach a reduced slope"
    return tuple(word), cur, kappa


def are_conjugate_gl(A: MatZ2, B: MatZ2) -> bool:
    """GL(2,Z) conjugacy: same trace, determinant and cyclic CF period."""
    if not (is_hyperbolic(A) and is_hyperbolic(B)):
        raise NotHyperbolic("conjugacy test requires hyperbolic matrices")
    if (A.trace, A.det) != (B.trace, B.det):
        return False
    pa = canonical_period(expand(eigen_data(A).kappa))
    pb = canonical_period(expand(eigen_data(B).kappa))
    return pa == pb


def find_conjugator(A: MatZ2, B: MatZ2) -> ConjugacyWitness:
    """An explicit generator word conjugating A to B, verified exactly."""
    if A == B:
        return ConjugacyWitness((), MatZ2.identity())
    if not are_conjugate_gl(A, B):
        raise NotConjugate(f"{A} and {B} are not GL(2,Z)-conjugate")
    word_a, red_a, val_a = _reduction_walk(A)
    word_b, red_b, val_b = _reduction_walk(B)
    # rotate the A-side through its period until the two reduced slopes agree
    period = expand(val_b.with_radicand(val_a.D)).period
    for _ in range(len(period)):
        if val_a == val_b.with_radicand(val_a.D):
            break
        a0 = val_a.floor()
        step: Word = ((2, 1), (1, -a0))
        red_a = conjugate_by(eval_word(step), red_a)
        val_a = (val_a - a0).inverse()
        word_a = step + word_a
    else:
        raise NotConjugate(f"period rotations of {A} and {B} never align")
    assert red_a == red_b, "equal slope, trace and det must pin the matrix"
    word = invert_word(word_b) + word_a
    witness = ConjugacyWitness(word, eval_word(word))
    assert witness.verifies(A, B)
    return witness


def self_conjugator_shift(A: MatZ2) -> ConjugacyWitness:
    """The self-conjugator walking once around the period; det = (-1)^q."""
    word_a, red_a, val_a = _reduction_walk(A)
    period = expand(val_a).period
    shift: list[tuple[int, int]] = []
    val = val_a
    for _ in period:
        a0 = val.floor()
        shift = [(2, 1), (1, -a0)] + shift
        val = (val - a0).inverse()
    assert val == val_a
    word = invert_word(word_a) + tuple(shift) + word_a
    witness = ConjugacyWitness(word, eval_word(word))
    assert witness.verifies(A, A)
    assert witness.det == (-1) ** len(period)
    return witness


def are_conjugate_sl(A: MatZ2, B: MatZ2) -> bool:
    """SL(2,Z) conjugacy via the period-parity statements.

    Odd period: any GL witness can be fixed up, so GL-conjugate suffices.
    Even period: all witnesses share one determinant, so one witness decides.
    """
    if not are_conjugate_gl(A, B):
        return False
    q = expand(eigen_data(A).kappa).period_length
    if q % 2 == 1:
        return True
    return find_conjugator(A, B).det == 1


def centralizer_generator(A: MatZ2) -> MatZ2:
    """Generator B of the centralizer C(A) = {+-B^n}, built from the CF word.

    For kappa = [b0; b1, ..., b_{n-1}, (a1, ..., aL)] the generator is
    C D C^{-1} with C the preperiod word and D the period word over C1, C2.
    """
    if not is_hyperbolic(A):
        raise NotHyperbolic(f"{A} is not hyperbolic")
    C1, C2, _ = generators()
    cf = expand(eigen_data(A).kappa)
    C = MatZ2.identity()
    for b in cf.preperiod:
        C = C @ (C1 ** b) @ C2
    D = MatZ2.identity()
    for a in cf.period:
        D = D @ (C1 ** a) @ C2
    B = C @ D @ C.inverse()
    assert A @ B == B @ A, "centralizer generator must commute with A"
    assert centralizer_power(A, B) is not None
    return B


def centralizer_power(A: MatZ2, B: MatZ2, bound: int = 64) -> int | None:
    """The m with A = +-B^m, if one exists with |m| <= bound."""
    for m in range(1, bound + 1):
        for s in (m, -m):
            P = B ** s
            if A == P or A == -P:
                return s
    return None


# -- Gauss correspondence with binary quadratic forms -------------------------


@dataclass(frozen=True)
class QuadraticForm:
    """Integer form A x^2 + B x y + C y^2."""

    A: int
    B: int
    C: int

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def __call__(self, x: int, y: int) -> int:
        return self.A * x * x + self.B * x * y + self.C * y * y


def to_form(X: MatZ2) -> QuadraticForm:
    """f(X)(z) = det(z | Xz): the form (c, t - 2a, -b)."""
    t = X.trace
    q = QuadraticForm(X.c, t - 2 * X.a, -X.b)
    assert q.disc == t * t - 4 * X.det
    return q


class FormParityError(ValueError):
    pass


class FormDiscriminantError(ValueError):
    pass


def from_form(q: QuadraticForm, t: int, det: int) -> MatZ2:
    """The unique X with trace t, determinant det and f(X) = q."""
    if (t - q.B) % 2 != 0:
        raise FormParityError(f"B = {q.B} and t = {t} differ in parity")
    if q.disc != t * t - 4 * det:
        raise FormDiscriminantError(f"disc {q.disc} != {t}^2 - 4*({det})")
    a = (t - q.B) // 2
    return MatZ2(a, -q.C, q.A, t - a)


def form_action(g: MatZ2, q: QuadraticForm) -> QuadraticForm:
    """(g*q)(z) = q(g^{-1} z), coefficient-wise."""
    gi = g.inverse()
    p, r = gi.a, gi.c
    s, w = gi.b, gi.d
    return QuadraticForm(
        q.A * p * p + q.B * p * r + q.C * r * r,
        2 * q.A * p * s + q.B * (p * w + s * r) + 2 * q.C * r * w,
        q.A * s * s + q.B * s * w + q.C * w * w,
    )


def check_diagram(g: MatZ2, X: MatZ2) -> bool:
    """Commutativity of the conjugation/form-action square for det g = 1."""
    if g.det != 1:
        raise ValueError("the diagram is asserted only for det g = 1")
    return to_form(conjugate_by(g, X)) == form_action(g, to_form(X))
