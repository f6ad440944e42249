"""SVG drawings of regions and tilings.

Lattice vertices ``(2x, y)`` map to the page as ``(x, y * sqrt(3)/2)`` times
``scale``, with y pointing down, so an up triangle whose base starts at
``(x, y)`` has its apex at ``(x + 1/2, y - sqrt(3)/2)``. Output is plain text
built in a fixed order with fixed number formatting, so equal inputs give
byte-identical documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lattice import (LEFT_TILTED, RIGHT_TILTED, UP, VERTICAL, Cell, Lozenge, Region, Tiling,
                      cell_vertices)

ROW_HEIGHT = math.sqrt(3) / 2


@dataclass(frozen=True)
class Style:
    scale: float = 20.0
    margin: float = 0.5
    # fills for vertical, left-tilted and right-tilted lozenges
    palette: tuple[str, str, str] = ("#e6ab02", "#7570b3", "#1b9e77")
    cell_fill: str = "#eeeeee"
    dent_fill: str = "white"
    show_dents: bool = True
    show_diagonal: bool = True
    stroke: str = "black"
    stroke_width: float = 1.0


def _fmt(v: float) -> str:
    text = f"{v:.2f}"
    return "0.00" if text == "-0.00" else text


class _Canvas:
    def __init__(self, style: Style, points: list[tuple[int, int]]):
        self.style = style
        xs = [x / 2 for x, _ in points] or [0.0]
        ys = [y * ROW_HEIGHT for _, y in points] or [0.0]
        self.x0 = min(xs) - style.margin
        self.y0 = min(ys) - style.margin
        self.width = (max(xs) - min(xs) + 2 * style.margin) * style.scale
        self.height = (max(ys) - min(ys) + 2 * style.margin) * style.scale
        self.body: list[str] = []

    def xy(self, p: tuple[int, int]) -> tuple[float, float]:
        s = self.style.scale
        return ((p[0] / 2 - self.x0) * s, (p[1] * ROW_HEIGHT - self.y0) * s)

    def polygon(self, pts, cls: str, fill: str, extra: str = "") -> None:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(self.xy, pts))
        self.body.append(
            f'<polygon class="{cls}" points="{coords}" fill="{fill}" '
            f'stroke="{self.style.stroke}" stroke-width="{_fmt(self.style.stroke_width)}"{extra}/>'
        )

    def diagonal(self, region: Region) -> None:
        if not self.style.show_diagonal or region.N == 0:
            return
        (x1, y1), (x2, y2) = self.xy((0, region.m)), self.xy((2 * region.N, region.m))
        self.body.append(
            f'<line class="diagonal" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
            f'y2="{_fmt(y2)}" stroke="{self.style.stroke}" stroke-dasharray="4 3"/>'
        )

    def dents(self, region: Region) -> None:
        if not self.style.show_dents:
            return
        for cell in sorted(region.dent_cells):
            self.polygon(region.vertices(cell), "dent", self.style.dent_fill)

    def document(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(self.width)}" height="{_fmt(self.height)}" '
            f'viewBox="0 0 {_fmt(self.width)} {_fmt(self.height)}">\n'
        )
        return head + "".join(line + "\n" for line in self.body) + "</svg>\n"


def _region_points(region: Region) -> list[tuple[int, int]]:
    cells = list(region.cells) + sorted(region.dent_cells)
    return [p for c in cells for p in region.vertices(c)]


def region_to_svg(region: Region, style: Style = Style()) -> str:
    """One triangle per cell, white dents and a dashed diagonal."""
    canvas = _Canvas(style, _region_points(region))
    for cell in region.cells:
        canvas.polygon(region.vertices(cell), f"cell {cell.orientation}", style.cell_fill)
    canvas.dents(region)
    canvas.diagonal(region)
    return canvas.document()


def lozenge_outline(lz: Lozenge, m: int) -> list[tuple[int, int]]:
    """The four corners of a lozenge, in order around its boundary."""
    a, b = cell_vertices(lz.up, m), cell_vertices(lz.down, m)
    s1, s2 = [p for p in a if p in b]
    (tip_up,) = [p for p in a if p not in b]
    (tip_down,) = [p for p in b if p not in a]
    return [tip_up, s1, tip_down, s2]


def tiling_to_svg(tiling: Tiling, style: Style = Style()) -> str:
    """One rhombus per lozenge, filled by orientation.

    Protruding lozenges of half-hexagon tilings are drawn whole but faded.
    """
    region = tiling.region
    m = region.m
    fills = dict(zip((VERTICAL, LEFT_TILTED, RIGHT_TILTED), style.palette))
    outlines = [lozenge_outline(lz, m) for lz in tiling.lozenges]
    canvas = _Canvas(style, _region_points(region) + [p for o in outlines for p in o])
    for lz, outline in zip(tiling.lozenges, outlines):
        kind = lz.orientation(m)
        if lz.protruding:
            canvas.polygon(outline, f"lozenge {kind} protruding", fills[kind],
                           ' fill-opacity="0.35" stroke-dasharray="2 2"')
        else:
            canvas.polygon(outline, f"lozenge {kind}", fills[kind])
    canvas.dents(region)
    canvas.diagonal(region)
    return canvas.document()
