"""Deterministic mixing demonstration on a grid.

Cell centers are mapped by the torus automorphism in exact modular integer
arithmetic; membership counts replace Monte-Carlo sampling, so runs are
reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .gl2z import MatZ2


def cat_mask(g: int) -> np.ndarray:
    """A cat-silhouette test shape on the g x g grid of cell centers."""
    xs = (2 * np.arange(g) + 1) / (2 * g)
    x, y = np.meshgrid(xs, xs, indexing="ij")
    head = ((x - 0.5) / 0.22) ** 2 + ((y - 0.42) / 0.26) ** 2 <= 1.0
    ear_l = (y >= 0.58) & (y <= 0.80) & (np.abs(x - 0.38) <= 0.085 * (0.80 - y) / 0.22)
    ear_r = (y >= 0.58) & (y <= 0.80) & (np.abs(x - 0.62) <= 0.085 * (0.80 - y) / 0.22)
    eye_l = ((x - 0.42) / 0.035) ** 2 + ((y - 0.48) / 0.05) ** 2 <= 1.0
    eye_r = ((x - 0.58) / 0.035) ** 2 + ((y - 0.48) / 0.05) ** 2 <= 1.0
    mouth = (np.abs(x - 0.5) <= 0.06) & (np.abs(y - 0.30) <= 0.018)
    return (head | ear_l | ear_r) & ~(eye_l | eye_r | mouth)


def iterate_centers(A: MatZ2, g: int, iters: int) -> tuple[np.ndarray, np.ndarray]:
    """Numerators (mod 2g) of the cell centers after `iters` steps.

    Center (i, j) is ((2i+1)/(2g), (2j+1)/(2g)); the map is exact on the
    numerators modulo 2g.
    """
    two_g = 2 * g
    px = (2 * np.arange(g, dtype=np.int64) + 1)[:, None] * np.ones(g, dtype=np.int64)[None, :]
    py = (2 * np.arange(g, dtype=np.int64) + 1)[None, :] * np.ones(g, dtype=np.int64)[:, None]
    for _ in range(iters):
        px, py = (A.a * px + A.b * py) % two_g, (A.c * px + A.d * py) % two_g
    return px, py


def rect_mask(px: np.ndarray, py: np.ndarray, g: int, rect) -> np.ndarray:
    """Membership of centers (given by numerators over 2g) in a rectangle."""
    x0, x1, y0, y1 = (Fraction(v) for v in rect)
    two_g = 2 * g

    def cmp_ge(p, bound):
        return p * bound.denominator >= bound.numerator * two_g

    def cmp_lt(p, bound):
        return p * bound.denominator < bound.numerator * two_g

    return cmp_ge(px, x0) & cmp_lt(px, x1) & cmp_ge(py, y0) & cmp_lt(py, y1)


def mixing_report(
    A: MatZ2,
    grid: int = 512,
    iters: int = 3,
    rect=(0, Fraction(1, 2), 0, Fraction(1, 2)),
) -> dict:
    """Compare mes(A^n X ∩ Y)/mes(Y) with mes(X) for the cat shape X."""
    X = cat_mask(grid)
    px, py = iterate_centers(A, grid, iters)
    inY = rect_mask(px, py, grid, rect)
    mes_x = X.sum() / grid**2
    mes_y = rect_mask(*iterate_centers(A, grid, 0), grid, rect).sum() / grid**2
    overlap = (X & inY).sum() / grid**2
    ratio = overlap / mes_y
    return {
        "grid": grid,
        "iters": iters,
        "mes_x": float(mes_x),
        "mes_y": float(mes_y),
        "overlap": float(overlap),
        "overlap_over_mes_y": float(ratio),
        "deviation": float(abs(ratio - mes_x)),
    }


def mask_frames(A: MatZ2, grid: int, iters: int) -> list[np.ndarray]:
    """Occupancy of the image of the cat shape after 0..iters steps."""
    X = cat_mask(grid)
    frames = []
    for n in range(iters + 1):
        px, py = iterate_centers(A, grid, n)
        occ = np.zeros((grid, grid), dtype=bool)
        occ[(px[X] // 2).astype(np.int64), (py[X] // 2).astype(np.int64)] = True
        frames.append(occ)
    return frames
