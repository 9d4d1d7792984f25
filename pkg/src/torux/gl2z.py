"""Integer 2x2 matrices of determinant +-1 and their eigen-data.

The automorphism of the 2-torus induced by A acts on the plane first; all
eigen quantities (lambda, mu, the slopes kappa of the unstable/stable lines
x = kappa*y) are exact surds over the session radicand D = t^2 - 4*det(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qfield import Surd, is_square


class NotHyperbolic(ValueError):
    """Raised when an operation requires a hyperbolic matrix."""


class InvalidDeterminant(ValueError):
    """Raised when a matrix does not have determinant +-1."""


@dataclass(frozen=True)
class MatZ2:
    """Integer matrix ((a, b), (c, d))."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise InvalidDeterminant(f"determinant {self.det} not +-1: {self}")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    @classmethod
    def identity(cls) -> MatZ2:
        return cls(1, 0, 0, 1)

    @classmethod
    def parse(cls, text: str) -> MatZ2:
        """Parse the CLI form "a,b;c,d" (row-major, semicolon between rows)."""
        try:
            rows = text.strip().split(";")
            (a, b), (c, d) = (tuple(int(x) for x in row.split(",")) for row in rows)
        except (ValueError, TypeError) as exc:
            raise ValueError(f"cannot parse matrix from {text!r}") from exc
        return cls(a, b, c, d)

    def __matmul__(self, other: MatZ2) -> MatZ2:
        return MatZ2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> MatZ2:
        return MatZ2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> MatZ2:
        s = self.det  # 1/det = det for det in {1, -1}
        return MatZ2(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def __pow__(self, n: int) -> MatZ2:
        if n < 0:
            return self.inverse() ** (-n)
        out = MatZ2.identity()
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def apply(self, x, y):
        """Image of a column vector; works for ints, Fractions and Surds."""
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"


def generators() -> tuple[MatZ2, MatZ2, MatZ2]:
    """The GL(2,Z) generators C1, C2, C3."""
    return MatZ2(1, 1, 0, 1), MatZ2(0, 1, 1, 0), MatZ2(-1, 0, 0, 1)


def discriminant(A: MatZ2) -> int:
    return A.trace * A.trace - 4 * A.det


def is_hyperbolic(A: MatZ2) -> bool:
    """Eigenvalues real with |lambda| > 1 > |mu|, equivalently D > 0 non-square."""
    D = discriminant(A)
    return D > 0 and not is_square(D)


@dataclass(frozen=True)
class EigenData:
    """Exact eigen quantities of a hyperbolic matrix."""

    matrix: MatZ2
    D: int
    lambda_u: Surd  # |lambda_u| > 1
    lambda_s: Surd  # |lambda_s| < 1
    kappa: Surd  # unstable slope: x = kappa * y
    kappa_s: Surd  # stable slope


def eigen_data(A: MatZ2) -> EigenData:
    if not is_hyperbolic(A):
        raise NotHyperbolic(f"{A} is not hyperbolic (D = {discriminant(A)})")
    # c = 0 would force integer eigenvalues +-1, contradicting hyperbolicity
    assert A.c != 0, "hyperbolic matrix cannot be triangular"
    D = discriminant(A)
    t = A.trace
    lam = Surd(Fraction(t, 2), Fraction(1, 2), D)
    one = Surd(1, 0, D)
    if not (lam.sign() * lam > one):
        lam = Surd(Fraction(t, 2), Fraction(-1, 2), D)
    mu = Surd(t, 0, D) - lam
    assert lam.sign() * lam > one and (mu.sign() * mu) < one
    kappa = (lam - A.d) / A.c
    kappa_s = (mu - A.d) / A.c
    # A (kappa, 1)^T = lambda (kappa, 1)^T, exactly
    vx, vy = A.apply(kappa, one)
    assert vx == lam * kappa and vy == lam
    assert lam * mu == A.det and lam + mu == t
    return EigenData(A, D, lam, mu, kappa, kappa_s)


def fixpoint_count(A: MatZ2) -> int:
    """Number of fixed points of the torus automorphism, |det(A - I)|."""
    if not is_hyperbolic(A):
        raise NotHyperbolic(f"{A} is not hyperbolic")
    return abs((A.a - 1) * (A.d - 1) - A.b * A.c)


def fixpoint_lattice_basis(A: MatZ2) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Columns of (A - I)^{-1}: a basis of the plane lattice of fixpoint lifts."""
    if not is_hyperbolic(A):
        raise NotHyperbolic(f"{A} is not hyperbolic")
    n = (A.a - 1) * (A.d - 1) - A.b * A.c
    return (
        (Fraction(A.d - 1, n), Fraction(-A.c, n)),
        (Fraction(-A.b, n), Fraction(A.a - 1, n)),
    )


def fixpoints(A: MatZ2) -> list[tuple[Fraction, Fraction]]:
    """All fixed points of the torus automorphism as exact points of [0,1)^2."""
    v1, v2 = fixpoint_lattice_basis(A)
    count = fixpoint_count(A)
    seen = set()
    out = []
    for i in range(count):
        for j in range(count):
            x = (i * v1[0] + j * v2[0]) % 1
            y = (i * v1[1] + j * v2[1]) % 1
            if (x, y) not in seen:
                seen.add((x, y))
                out.append((x, y))
    assert len(out) == count
    out.sort()
    return out
