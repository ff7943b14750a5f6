"""Deterministic ASCII and SVG pictures of regions and tilings."""

from __future__ import annotations

import math
from fractions import Fraction

from .counting import Tiling
from .lattice import Orient, TriangleCell
from .regions import Region

HALF = Fraction(1, 2)


def _bounds(cells):
    layers = [c.layer for c in cells]
    idx = [c.index for c in cells]
    return min(layers), max(layers), min(idx), max(idx)


def _header(region: Region) -> str:
    ups, downs = len(region.up_cells), len(region.down_cells)
    fam = region.label.family if region.label else "custom"
    return (
        f"family={fam} cells={len(region.cells)} up={ups} down={downs} "
        f"balanced={region.balanced} barriers={len(region.barred)} "
        f"weighted_edges={len(region.weights)}"
    )


def region_ascii(region: Region) -> str:
    """One character per cell ('^' up, 'v' down); barrier rows use '='."""
    lines = [_header(region)]
    if not region.cells:
        return "\n".join(lines)
    lo_l, hi_l, lo_i, hi_i = _bounds(region.cells)
    width = hi_i - lo_i + 1
    barrier_below: dict[int, set[int]] = {}
    for up, down in region.barred:
        barrier_below.setdefault(up.layer, set()).add(up.index)
    for layer in range(lo_l, hi_l + 1):
        row = [" "] * width
        for c in region.cells:
            if c.layer == layer:
                row[c.index - lo_i] = "^" if c.orient is Orient.UP else "v"
        lines.append("".join(row).rstrip())
        marks = barrier_below.get(layer)
        if marks:
            sep = [" "] * width
            for i in marks:
                sep[i - lo_i] = "="
            lines.append("".join(sep).rstrip())
    return "\n".join(lines)


_KIND_CHAR = {"vertical": "I", "left": "L", "right": "R"}


def tiling_ascii(region: Region, tiling: Tiling) -> str:
    """Both cells of each lozenge share a letter: I vertical, L/R leaning.

    Weight-1/2 placements are lowercase.
    """
    lines = [_header(region), f"tiling weight={tiling.weight}"]
    lo_l, hi_l, lo_i, hi_i = _bounds(region.cells)
    width = hi_i - lo_i + 1
    grid = [[" "] * width for _ in range(hi_l - lo_l + 1)]
    for p in tiling.placements:
        ch = _KIND_CHAR[p.kind]
        if p.weight != 1:
            ch = ch.lower()
        for c in (p.up, p.down):
            grid[c.layer - lo_l][c.index - lo_i] = ch
    lines.extend("".join(row).rstrip() for row in grid)
    return "\n".join(lines)


# -- SVG -------------------------------------------------------------------------

_SIDE = 32.0
_H = _SIDE * math.sqrt(3) / 2


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _corners(cell: TriangleCell):
    x0 = cell.index * _SIDE / 2
    if cell.orient is Orient.UP:
        return [
            (x0, (cell.layer + 1) * _H),
            (x0 + _SIDE, (cell.layer + 1) * _H),
            (x0 + _SIDE / 2, cell.layer * _H),
        ]
    return [
        (x0, cell.layer * _H),
        (x0 + _SIDE, cell.layer * _H),
        (x0 + _SIDE / 2, (cell.layer + 1) * _H),
    ]


def _polygon(points, fill, stroke="#444444", width=1.0, extra="") -> str:
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    return (
        f'<polygon points="{pts}" fill="{fill}" stroke="{stroke}" '
        f'stroke-width="{_fmt(width)}"{extra} />'
    )


def _svg_document(body: list[str], cells) -> str:
    lo_l, hi_l, lo_i, hi_i = _bounds(cells)
    x0 = lo_i * _SIDE / 2 - 4
    y0 = lo_l * _H - 4
    w = (hi_i - lo_i + 2) * _SIDE / 2 + 8
    h = (hi_l - lo_l + 1) * _H + 8
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">'
    )
    return "\n".join([head, *body, "</svg>"])


def _shaded_core(a: TriangleCell, b: TriangleCell) -> str:
    # small diamond on the shared edge of a weight-1/2 lozenge
    shared_y = max(a.layer, b.layer) * _H
    cx = (max(a.index, b.index) * _SIDE / 2) + (
        _SIDE / 2 if a.layer != b.layer else 0.0
    )
    if a.layer != b.layer:
        cx = a.index * _SIDE / 2 + _SIDE / 2
    r = _SIDE / 6
    pts = [(cx - r, shared_y), (cx, shared_y - r), (cx + r, shared_y), (cx, shared_y + r)]
    return _polygon(pts, "#999999", stroke="none", width=0.0)


def region_svg(region: Region) -> str:
    """Region picture: dents shaded dark, barriers as bold horizontal bars,
    weight-1/2 lozenge slots marked with a shaded core."""
    body = [f"<!-- {_header(region)} -->"]
    cells = set(region.cells)
    for c in sorted(region.cells):
        fill = "#f4f0e8" if c.orient is Orient.UP else "#dde6f0"
        body.append(_polygon(_corners(c), fill))
    if region.axis:
        for up, downc in region.axis:
            for cell in (up, downc):
                if cell is not None and cell not in cells:
                    body.append(_polygon(_corners(cell), "#333333"))
    for up, downc in sorted(region.barred):
        y = (up.layer + 1) * _H
        x0 = up.index * _SIDE / 2
        body.append(
            f'<line x1="{_fmt(x0)}" y1="{_fmt(y)}" x2="{_fmt(x0 + _SIDE)}" '
            f'y2="{_fmt(y)}" stroke="#c01010" stroke-width="4.00" />'
        )
    for (up, downc), w in region.weights:
        if w == HALF:
            body.append(_shaded_core(up, downc))
    ref_cells = set(region.cells)
    if region.axis:
        ref_cells |= {c for pair in region.axis for c in pair if c is not None}
    return _svg_document(body, ref_cells)


def tiling_svg(region: Region, tiling: Tiling) -> str:
    fills = {"vertical": "#b8d8b8", "left": "#d8c8a8", "right": "#a8c0d8"}
    body = [f"<!-- {_header(region)} tiling weight={tiling.weight} -->"]
    for p in sorted(tiling.placements, key=lambda q: q.up):
        pts_up = _corners(p.up)
        pts_down = _corners(p.down)
        merged = sorted(set(pts_up) | set(pts_down))
        # lozenge outline: union of the two triangles is a quadrilateral
        cx = sum(x for x, _ in merged) / len(merged)
        cy = sum(y for _, y in merged) / len(merged)
        quad = sorted(merged, key=lambda q: math.atan2(q[1] - cy, q[0] - cx))
        body.append(_polygon(quad, fills[p.kind]))
        if p.weight != 1:
            body.append(_shaded_core(p.up, p.down))
    for up, downc in sorted(region.barred):
        y = (up.layer + 1) * _H
        x0 = up.index * _SIDE / 2
        body.append(
            f'<line x1="{_fmt(x0)}" y1="{_fmt(y)}" x2="{_fmt(x0 + _SIDE)}" '
            f'y2="{_fmt(y)}" stroke="#c01010" stroke-width="4.00" />'
        )
    return _svg_document(body, region.cells)
