"""Deterministic SVG output for partitions, sequence strips and rasters.

Float conversion of exact coordinates happens only here; element order is
fixed so identical inputs give byte-identical files.
"""

from __future__ import annotations

import math

from .geometry import Frame, Rect

PALETTE = ["#4878cf", "#ee854a", "#6acc65", "#d65f5f", "#956cb4", "#8c613c", "#dc7ec0", "#797979"]
ISLAND_COLOR = "#4878cf"
PARQUET_COLOR = "#ee854a"


class SvgCanvas:
    def __init__(self, width: float, height: float):
        self.width = width
        self.height = height
        self.elements: list[str] = []

    def polygon(self, pts, fill="none", stroke="#000000", width=1.0, opacity=1.0):
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in pts)
        self.elements.append(
            f'<polygon points="{coords}" fill="{fill}" fill-opacity="{opacity:.3f}" '
            f'stroke="{stroke}" stroke-width="{width:.3f}"/>'
        )

    def rect(self, x, y, w, h, fill, stroke="none", opacity=1.0):
        self.elements.append(
            f'<rect x="{x:.3f}" y="{y:.3f}" width="{w:.3f}" height="{h:.3f}" '
            f'fill="{fill}" fill-opacity="{opacity:.3f}" stroke="{stroke}"/>'
        )

    def line(self, x1, y1, x2, y2, stroke="#000000", width=1.0):
        self.elements.append(
            f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
            f'stroke="{stroke}" stroke-width="{width:.3f}"/>'
        )

    def text(self, x, y, s, size=12):
        self.elements.append(
            f'<text x="{x:.3f}" y="{y:.3f}" font-size="{size}" font-family="monospace">{s}</text>'
        )

    def tostring(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width:.0f}" '
            f'height="{self.height:.0f}" viewBox="0 0 {self.width:.0f} {self.height:.0f}">\n'
            f'<rect x="0" y="0" width="{self.width:.0f}" height="{self.height:.0f}" fill="#ffffff"/>\n'
        )
        return head + "\n".join(self.elements) + "\n</svg>\n"

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            fh.write(self.tostring())


def _piece_polygons(frame: Frame, rect: Rect, patch):
    """Float polygons of all lattice translates of a piece meeting the patch."""
    x0, x1, y0, y1 = patch
    corners = [
        (float(a), float(b))
        for a, b in (
            frame.to_plane(rect.u0, rect.s0),
            frame.to_plane(rect.u1, rect.s0),
            frame.to_plane(rect.u1, rect.s1),
            frame.to_plane(rect.u0, rect.s1),
        )
    ]
    xs = [p[0] for p in corners]
    ys = [p[1] for p in corners]
    out = []
    for m in range(math.floor(x0 - max(xs)) - 1, math.ceil(x1 - min(xs)) + 2):
        for n in range(math.floor(y0 - max(ys)) - 1, math.ceil(y1 - min(ys)) + 2):
            poly = [(x + m, y + n) for x, y in corners]
            if max(p[0] for p in poly) < x0 or min(p[0] for p in poly) > x1:
                continue
            if max(p[1] for p in poly) < y0 or min(p[1] for p in poly) > y1:
                continue
            out.append(poly)
    return out


def render_partition(partition, path: str, patch=(-0.6, 1.6, -0.6, 1.6), px=500, colors=None):
    """Plane patch with all lattice translates of the pieces, color per piece."""
    x0, x1, y0, y1 = patch
    scale = px / (x1 - x0)
    canvas = SvgCanvas(px, (y1 - y0) * scale)

    def to_px(p):
        return ((p[0] - x0) * scale, (y1 - p[1]) * scale)

    for idx, rect in enumerate(partition.pieces):
        color = (colors or PALETTE)[idx % len(colors or PALETTE)]
        for poly in _piece_polygons(partition.frame, rect, patch):
            canvas.polygon([to_px(p) for p in poly], fill=color, stroke="#303030", width=0.6, opacity=0.55)
    for gx in range(math.floor(x0), math.ceil(x1) + 1):
        canvas.line(*to_px((gx, y0)), *to_px((gx, y1)), stroke="#999999", width=0.5)
    for gy in range(math.floor(y0), math.ceil(y1) + 1):
        canvas.line(*to_px((x0, gy)), *to_px((x1, gy)), stroke="#999999", width=0.5)
    canvas.save(path)


def render_strip(entries, path: str, panel_px=240):
    """Side-by-side panels of consecutive vertex partitions, island/parquet
    color-coded, in the style of a sequence-of-partitions figure."""
    pad = 8
    n = len(entries)
    canvas = SvgCanvas(n * (panel_px + pad) + pad, panel_px + 2 * pad + 18)
    for i, e in enumerate(entries):
        ox = pad + i * (panel_px + pad)
        frame = e.partition.frame
        pts = []
        for rect in e.partition.pieces:
            corners = [
                frame.to_plane(rect.u0, rect.s0),
                frame.to_plane(rect.u1, rect.s0),
                frame.to_plane(rect.u1, rect.s1),
                frame.to_plane(rect.u0, rect.s1),
            ]
            pts.append([(float(x), float(y)) for x, y in corners])
        allx = [x for poly in pts for x, _ in poly]
        ally = [y for poly in pts for _, y in poly]
        span = max(max(allx) - min(allx), max(ally) - min(ally), 1e-9)
        scale = panel_px / span

        def to_px(p, ox=ox, x_lo=min(allx), y_hi=max(ally), scale=scale):
            return (ox + (p[0] - x_lo) * scale, pad + (y_hi - p[1]) * scale)

        color = ISLAND_COLOR if e.ptype == "island" else PARQUET_COLOR
        for j, poly in enumerate(pts):
            canvas.polygon(
                [to_px(p) for p in poly],
                fill=color if j == 0 else "#cccccc",
                stroke="#303030",
                width=0.8,
                opacity=0.65,
            )
        label = f"(k={e.k}, l={e.l}) {'I' if e.ptype == 'island' else 'P'}"
        canvas.text(ox, panel_px + pad + 14, label, size=11)
    canvas.save(path)


def render_mask_frames(frames, path: str, max_cells=96):
    """Binary occupancy frames drawn side by side (downsampled)."""
    import numpy as np

    pad = 6
    size = 220
    canvas = SvgCanvas(len(frames) * (size + pad) + pad, size + 2 * pad + 16)
    for idx, mask in enumerate(frames):
        g = mask.shape[0]
        step = max(1, g // max_cells)
        small = mask[::step, ::step]
        cell = size / small.shape[0]
        ox = pad + idx * (size + pad)
        ii, jj = np.nonzero(small)
        for i, j in sorted(zip(ii.tolist(), jj.tolist())):
            canvas.rect(ox + i * cell, pad + (small.shape[1] - 1 - j) * cell, cell, cell, fill="#333333")
        canvas.text(ox, size + pad + 12, f"n={idx}", size=11)
    canvas.save(path)
