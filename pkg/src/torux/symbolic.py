"""Shift spaces and codings.

The doubling-map/Bernoulli model is exact over rationals; partitions of the
torus yield topological Markov shifts whose entropy log|lambda| is certified
by an exact eigenvalue test over Q(sqrt(D)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gl2z import MatZ2, eigen_data
from .partitions import TorusPartition, TransitionGraph
from .qfield import Surd, surd_max, surd_min


# -- symbol sequences ---------------------------------------------------------


def _primitive(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


@dataclass(frozen=True)
class SymbolSequence:
    """One-sided eventually periodic sequence over symbols 0..k-1."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]
    alphabet_size: int = 2

    def __post_init__(self):
        pre = tuple(self.preperiod)
        per = _primitive(tuple(self.period))
        if not per:
            raise ValueError("period must be nonempty")
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = (per[-1],) + per[:-1]
        k = self.alphabet_size
        if any(not 0 <= s < k for s in pre + per):
            raise ValueError("symbol out of range")
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def symbol(self, n: int) -> int:
        if n < len(self.preperiod):
            return self.preperiod[n]
        return self.period[(n - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> list[int]:
        return [self.symbol(i) for i in range(n)]

    def shift(self) -> SymbolSequence:
        if self.preperiod:
            return SymbolSequence(self.preperiod[1:], self.period, self.alphabet_size)
        return SymbolSequence((), self.period[1:] + self.period[:1], self.alphabet_size)


def rho_window(a: list[int], b: list[int]) -> Fraction:
    """The product metric summed over a finite window."""
    assert len(a) == len(b)
    return sum(
        (Fraction(1, 2 ** (n + 1)) for n in range(len(a)) if a[n] != b[n]),
        Fraction(0),
    )


# -- the doubling map ---------------------------------------------------------


@dataclass(frozen=True)
class DoublingCode:
    sequence: SymbolSequence
    ambiguous: bool
    alternative: SymbolSequence | None


def doubling_code(x: Fraction) -> DoublingCode:
    """Journey diary of x under doubling, i.e. its binary expansion.

    Binary rationals have two diaries; the canonical one has no tail of 1s
    and the other is reported alongside with the ambiguity flag.
    """
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError(f"need 0 <= x < 1, got {x}")
    seen: dict[Fraction, int] = {}
    digits: list[int] = []
    y = x
    while y not in seen:
        seen[y] = len(digits)
        digits.append(1 if y >= Fraction(1, 2) else 0)
        y = (2 * y) % 1
    m = seen[y]
    seq = SymbolSequence(tuple(digits[:m]), tuple(digits[m:]))
    dyadic = (x.denominator & (x.denominator - 1)) == 0
    if not dyadic:
        return DoublingCode(seq, False, None)
    if x == 0:
        return DoublingCode(seq, True, SymbolSequence((), (1,)))
    # flip the last 1 and append a tail of 1s
    n = 0
    while seq.symbol(n) != 1 or any(seq.symbol(j) for j in range(n + 1, n + 64)):
        n += 1
    head = tuple(seq.symbol(i) for i in range(n)) + (0,)
    return DoublingCode(seq, True, SymbolSequence(head, (1,)))


def doubling_decode(s: SymbolSequence) -> Fraction:
    """Exact value of an eventually periodic binary diary, on the circle."""
    m, L = len(s.preperiod), len(s.period)
    head = sum(Fraction(d, 2 ** (i + 1)) for i, d in enumerate(s.preperiod))
    per = sum(d * 2 ** (L - 1 - j) for j, d in enumerate(s.period))
    return (head + Fraction(per, (2**L - 1) * 2**m)) % 1


def arc_F_N(prefix: list[int]) -> tuple[Fraction, Fraction]:
    """The closed arc F_N determined by the first N+1 diary symbols."""
    n = len(prefix)
    assert n >= 1 and all(d in (0, 1) for d in prefix)
    i = 0
    for d in prefix:
        i = 2 * i + d
    return Fraction(i, 2**n), Fraction(i + 1, 2**n)


# -- cylinders and Bernoulli measures -----------------------------------------


@dataclass(frozen=True)
class MeasureSpec:
    probabilities: tuple[Fraction, ...]

    def __post_init__(self):
        ps = tuple(Fraction(p) for p in self.probabilities)
        if any(p < 0 for p in ps) or sum(ps) != 1:
            raise ValueError("probabilities must be nonnegative and sum to 1")
        object.__setattr__(self, "probabilities", ps)


def fair_coin() -> MeasureSpec:
    return MeasureSpec((Fraction(1, 2), Fraction(1, 2)))


@dataclass(frozen=True)
class Cylinder:
    """Sequences with finitely many fixed coordinates."""

    constraints: tuple[tuple[int, int], ...]  # (index, symbol), distinct indices

    def __post_init__(self):
        cs = tuple(sorted(self.constraints))
        idx = [i for i, _ in cs]
        if len(set(idx)) != len(idx):
            raise ValueError("cylinder indices must be distinct")
        if any(i < 0 for i in idx):
            raise ValueError("cylinder indices must be nonnegative")
        object.__setattr__(self, "constraints", cs)


def cylinder_measure(c: Cylinder, m: MeasureSpec) -> Fraction:
    out = Fraction(1)
    for _, sym in c.constraints:
        out *= m.probabilities[sym]
    return out


def shift_preimage(c: Cylinder) -> Cylinder:
    """sigma^{-1} of a cylinder: every constrained index moves up by one."""
    return Cylinder(tuple((i + 1, s) for i, s in c.constraints))


# -- topological Markov shifts -------------------------------------------------


@dataclass(frozen=True)
class MarkovSubset:
    """Subshift given by a nonnegative admissibility matrix (multiplicities)."""

    alphabet_size: int
    admissible: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = self.alphabet_size
        adm = tuple(tuple(row) for row in self.admissible)
        assert len(adm) == k and all(len(r) == k for r in adm)
        assert all(x >= 0 for r in adm for x in r)
        object.__setattr__(self, "admissible", adm)

    def allows(self, i: int, j: int) -> bool:
        return self.admissible[i][j] > 0

    def word_admissible(self, word) -> bool:
        return all(self.allows(a, b) for a, b in zip(word, word[1:]))


def markov_from_graph(g: TransitionGraph) -> MarkovSubset:
    """The edge shift of the multigraph: symbols are edges, (p, q) admissible
    when the end of edge p is the beginning of edge q."""
    adj = g.edge_adjacency()
    return MarkovSubset(len(g.edges), tuple(tuple(r) for r in adj))


def surd_det(M: list[list[Surd]]) -> Surd:
    """Exact determinant over Q(sqrt(D)) by Gaussian elimination."""
    n = len(M)
    D = M[0][0].D
    M = [row[:] for row in M]
    det = Surd(1, 0, D)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col].sign() != 0), None)
        if piv is None:
            return Surd(0, 0, D)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det = det * M[col][col]
        inv = M[col][col].inverse()
        for r in range(col + 1, n):
            f = M[r][col] * inv
            if f.sign() == 0:
                continue
            for c in range(col, n):
                M[r][c] = M[r][c] - f * M[col][c]
    return det


@dataclass(frozen=True)
class EntropyCert:
    """Entropy log|lambda| with lambda certified as an exact eigenvalue."""

    lam: Surd
    matrix_size: int
    exact_eigenvalue: bool
    perron_float: float
    agreement: float

    @property
    def log2(self) -> float:
        return math.log2(abs(float(self.lam)))

    @property
    def ln(self) -> float:
        return math.log(abs(float(self.lam)))

    @property
    def ok(self) -> bool:
        return self.exact_eigenvalue and self.agreement <= 1e-9


def perron_root(matrix) -> float:
    """Spectral radius of a nonnegative integer matrix (largest component)."""
    return float(max(abs(v) for v in np.linalg.eigvals(np.array(matrix, dtype=float))))


def entropy(m: MarkovSubset, lam: Surd) -> EntropyCert:
    """Certify that |lam| is the growth rate of the subshift.

    det(M - lam*I) is evaluated exactly over Q(sqrt(D)); the float Perron
    root is only the 1e-9 cross-check."""
    k = m.alphabet_size
    D = lam.D
    M = [
        [Surd(m.admissible[i][j], 0, D) - (lam if i == j else Surd(0, 0, D)) for j in range(k)]
        for i in range(k)
    ]
    exact = surd_det(M).is_zero
    rho = perron_root(m.admissible)
    return EntropyCert(lam, k, exact, rho, abs(rho - abs(float(lam))))


# -- rational Markov measures on the shift -------------------------------------


def uniform_markov_chain(g: TransitionGraph) -> tuple[list[Fraction], list[list[Fraction]]]:
    """A rational stationary Markov chain on the vertices: uniform over
    out-edges, with the exact stationary vector."""
    N = g.vertex_matrix()
    k = g.n_vertices
    P = []
    for i in range(k):
        deg = sum(N[i])
        assert deg > 0, "every vertex needs an outgoing edge"
        P.append([Fraction(N[i][j], deg) for j in range(k)])
    pi = _stationary_vector(P)
    return pi, P


def _stationary_vector(P: list[list[Fraction]]) -> list[Fraction]:
    k = len(P)
    # solve pi (P - I) = 0 with sum(pi) = 1, over Fractions
    rows = [[P[i][j] - (1 if i == j else 0) for i in range(k)] for j in range(k)]
    rows[-1] = [Fraction(1)] * k  # replace one equation by the normalization
    rhs = [Fraction(0)] * (k - 1) + [Fraction(1)]
    aug = [row + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    pi = [aug[i][k] for i in range(k)]
    assert sum(pi) == 1 and all(p >= 0 for p in pi)
    return pi


def markov_cylinder_measure(
    pi: list[Fraction], P: list[list[Fraction]], word: list[int]
) -> Fraction:
    """Measure of the cylinder fixing a consecutive word from index 0."""
    out = pi[word[0]]
    for a, b in zip(word, word[1:]):
        out *= P[a][b]
    return out


# -- coding of torus points ----------------------------------------------------


def _point_frame_coords(P: TorusPartition, x: Fraction, y: Fraction):
    D = P.frame.e1[0].D
    return P.frame.to_frame(Surd(x, 0, D), Surd(y, 0, D))


def _candidates_at(P: TorusPartition, A: MatZ2, pu: Surd, ps: Surd, n: int):
    """All (symbol, rect) with A^n x in the closed piece lift; the rect is
    the A^{-n} image, i.e. a closed constraint around the original x."""
    eig = eigen_data(A)
    lam_n = eig.lambda_u**n
    mu_n = eig.lambda_s**n
    qu, qs = pu * lam_n, ps * mu_n
    out = []
    for a, pc in enumerate(P.pieces):
        for m, k in P.frame.lattice_in_box(qu - pc.u1, qu - pc.u0, qs - pc.s1, qs - pc.s0):
            du, ds = P.frame.lattice_coords(m, k)
            shifted = pc.translate(du, ds)
            if shifted.contains_point(qu, qs):
                out.append((a, shifted.scale(lam_n.inverse(), mu_n.inverse())))
    return out


def encode_point_boxes(
    P: TorusPartition, A: MatZ2, x: Fraction, y: Fraction, N: int
) -> dict[tuple[int, ...], tuple[Surd, Surd, Surd, Surd]]:
    """Words of length 2N+1 admissible for x under the closure coding,
    each with the open box the nested intersection pins down around x."""
    pu, ps = _point_frame_coords(P, x, y)
    layers = [_candidates_at(P, A, pu, ps, n) for n in range(-N, N + 1)]
    found: dict[tuple[int, ...], tuple[Surd, Surd, Surd, Surd]] = {}

    def dfs(depth: int, word: tuple[int, ...], box):
        if depth == len(layers):
            found[word] = box
            return
        for sym, rect in layers[depth]:
            u0, u1, s0, s1 = box
            nu0, nu1 = surd_max(u0, rect.u0), surd_min(u1, rect.u1)
            ns0, ns1 = surd_max(s0, rect.s0), surd_min(s1, rect.s1)
            if nu0 < nu1 and ns0 < ns1:
                dfs(depth + 1, word + (sym,), (nu0, nu1, ns0, ns1))

    if layers[0]:
        D = P.frame.e1[0].D
        big = Surd(10**9, 0, D)
        dfs(0, (), (-big, big, -big, big))
    return found


def encode_point(
    P: TorusPartition, A: MatZ2, x: Fraction, y: Fraction, N: int
) -> list[tuple[int, ...]]:
    """All words of length 2N+1 admissible for x under the closure coding:
    x must lie in the closure of the open nested intersection."""
    return sorted(encode_point_boxes(P, A, x, y, N))


def encode_point_naive(
    P: TorusPartition, A: MatZ2, x: Fraction, y: Fraction, N: int
) -> list[tuple[int, ...]]:
    """Words allowed by per-time closed membership alone (the naive coding)."""
    import itertools

    pu, ps = _point_frame_coords(P, x, y)
    layers = []
    for n in range(-N, N + 1):
        syms = sorted({a for a, _ in _candidates_at(P, A, pu, ps, n)})
        layers.append(syms)
    return sorted(itertools.product(*layers))
