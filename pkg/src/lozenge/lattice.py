"""Regions of the triangular lattice, lozenge tilings and a brute-force counter.

Coordinates
-----------
A region is a hexagon cut by its horizontal diagonal into an upper half of
``m`` rows and a lower half of ``n`` rows; ``N`` is the diagonal length.
Cells are addressed logically as ``(half, row, index, orientation)``:

* upper row ``i`` (1 = top, ``m`` = on the diagonal) holds ``N-m+i`` up cells
  and ``N-m+i-1`` down cells, ordered ``up1, down1, up2, ..., up_last``;
* lower row ``k`` (1 = on the diagonal) holds ``N-k+1`` down cells and
  ``N-k`` up cells, ordered ``down1, up1, down2, ..., down_last``.

Dents are up cells of upper row ``m`` and down cells of lower row 1, both
numbered ``1..N``. Up cell ``j`` of upper row ``m`` and down cell ``j`` of
lower row 1 share an edge on the diagonal; together they form the vertical
lozenge "crossing the diagonal at position j".

For drawing and adjacency each cell also gets integer vertex coordinates
``(2x, y)`` with ``y`` growing downwards, the diagonal on ``y = m`` and its
left end at ``x = 0``.

Lozenge orientations: *vertical* when the shared edge is horizontal,
*left-tilted* when the down cell lies left of the up cell, *right-tilted*
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

from .core import ExactCount, RowSet, as_rowset
from .gtp import GTPattern, validate_pattern

UPPER, LOWER = "upper", "lower"
UP, DOWN = "up", "down"
VERTICAL, LEFT_TILTED, RIGHT_TILTED = "vertical", "left-tilted", "right-tilted"


class Cell(NamedTuple):
    half: str
    row: int
    index: int
    orientation: str

    def to_json(self) -> list:
        return [self.half, self.row, self.index, self.orientation]

    @classmethod
    def from_json(cls, data) -> "Cell":
        half, row, index, orientation = data
        if half not in (UPPER, LOWER) or orientation not in (UP, DOWN):
            raise ValueError(f"bad cell {data!r}")
        return cls(half, int(row), int(index), orientation)


def cell_vertices(cell: Cell, m: int) -> tuple[tuple[int, int], ...]:
    """Vertices of ``cell`` as ``(2x, y)`` pairs, for a region with ``m`` upper rows."""
    half, i, j, o = cell
    if half == UPPER:
        left = (m - i) + 2 * (j - 1)
        if o == UP:
            return ((left, i), (left + 2, i), (left + 1, i - 1))
        return ((left + 1, i - 1), (left + 3, i - 1), (left + 2, i))
    left = (i - 1) + 2 * (j - 1)
    y = m + i
    if o == DOWN:
        return ((left, y - 1), (left + 2, y - 1), (left + 1, y))
    return ((left + 2, y - 1), (left + 1, y), (left + 3, y))


def diagonal_partner(cell: Cell, m: int) -> Cell:
    """The cell across the diagonal from a diagonal-row cell."""
    if cell.half == UPPER:
        return Cell(LOWER, 1, cell.index, DOWN)
    return Cell(UPPER, m, cell.index, UP)


def _row_cells(half: str, row: int, ups: int, downs: int) -> list[Cell]:
    out = []
    if half == UPPER:
        for j in range(1, ups + 1):
            out.append(Cell(half, row, j, UP))
            if j <= downs:
                out.append(Cell(half, row, j, DOWN))
    else:
        for j in range(1, downs + 1):
            out.append(Cell(half, row, j, DOWN))
            if j <= ups:
                out.append(Cell(half, row, j, UP))
    return out


class _Geometry:
    """All cells of the undented ``(m, n, N)`` hexagon and their adjacencies."""

    def __init__(self, m: int, n: int, N: int):
        self.m, self.n, self.N = m, n, N
        rows = []
        for i in range(1, m + 1):
            rows.append(_row_cells(UPPER, i, N - m + i, N - m + i - 1))
        for k in range(1, n + 1):
            rows.append(_row_cells(LOWER, k, N - k, N - k + 1))
        # pivot order: top to bottom, then left to right
        self.rows = rows
        self.cells = [c for row in rows for c in row]
        self.verts = {c: cell_vertices(c, m) for c in self.cells}
        by_edge: dict[frozenset, list[Cell]] = {}
        for c, vs in self.verts.items():
            for a, b in combinations(vs, 2):
                by_edge.setdefault(frozenset((a, b)), []).append(c)
        self.adjacent: dict[Cell, list[Cell]] = {c: [] for c in self.cells}
        for pair in by_edge.values():
            if len(pair) == 2:
                a, b = pair
                self.adjacent[a].append(b)
                self.adjacent[b].append(a)


@lru_cache(maxsize=None)
def _geometry(m: int, n: int, N: int) -> _Geometry:
    return _Geometry(m, n, N)


def _sides_lozenge(up: Cell, down: Cell, m: int) -> str:
    uv, dv = cell_vertices(up, m), cell_vertices(down, m)
    shared = set(uv) & set(dv)
    if len(shared) != 2:
        raise ValueError(f"cells {up} and {down} are not edge-adjacent")
    (_, y1), (_, y2) = shared
    if y1 == y2:
        return VERTICAL
    if sum(x for x, _ in dv) < sum(x for x, _ in uv):
        return LEFT_TILTED
    return RIGHT_TILTED


@dataclass(frozen=True)
class Region:
    """A (possibly dented, possibly half) hexagon.

    ``m == 0`` or ``n == 0`` gives a half-hexagon. ``dents_up`` are removed up
    cells of upper row ``m``; ``dents_down`` are removed down cells of lower
    row 1.
    """

    m: int
    n: int
    N: int
    dents_up: RowSet = field(default_factory=RowSet)
    dents_down: RowSet = field(default_factory=RowSet)

    def __post_init__(self):
        object.__setattr__(self, "dents_up", as_rowset(self.dents_up))
        object.__setattr__(self, "dents_down", as_rowset(self.dents_down))
        if self.m < 0 or self.n < 0:
            raise ValueError("row counts must be nonnegative")
        if self.N < max(self.m, self.n):
            raise ValueError(f"diagonal length {self.N} shorter than row counts {self.m}, {self.n}")
        for name, dents, rows in (("up", self.dents_up, self.m), ("down", self.dents_down, self.n)):
            if dents and rows == 0:
                raise ValueError(f"{name} dents need a nonempty half")
            if dents and dents[-1] > self.N:
                raise ValueError(
                    f"dent position {dents[-1]} exceeds diagonal length {self.N}"
                )

    @property
    def geometry(self) -> _Geometry:
        return _geometry(self.m, self.n, self.N)

    @cached_property
    def dent_cells(self) -> frozenset[Cell]:
        return frozenset(
            [Cell(UPPER, self.m, j, UP) for j in self.dents_up]
            + [Cell(LOWER, 1, j, DOWN) for j in self.dents_down]
        )

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """Cells in pivot order (top row first, left to right)."""
        dents = self.dent_cells
        return tuple(c for c in self.geometry.cells if c not in dents)

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    def counts(self) -> tuple[int, int]:
        ups = sum(1 for c in self.cells if c.orientation == UP)
        return ups, len(self.cells) - ups

    def is_balanced(self) -> bool:
        ups, downs = self.counts()
        return ups == downs

    def vertices(self, cell: Cell) -> tuple[tuple[int, int], ...]:
        return cell_vertices(cell, self.m)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "N": self.N,
                "U": self.dents_up.to_json(), "L": self.dents_down.to_json()}

    @classmethod
    def from_json(cls, data) -> "Region":
        if not isinstance(data, dict):
            raise ValueError("region must be a JSON object")
        try:
            return cls(int(data["m"]), int(data["n"]), int(data["N"]),
                       RowSet.from_json(data.get("U", [])),
                       RowSet.from_json(data.get("L", [])))
        except KeyError as exc:
            raise ValueError(f"region is missing field {exc}") from None


@dataclass(frozen=True, order=True)
class Lozenge:
    """An up cell and a down cell sharing an edge.

    A protruding lozenge has only one of its cells inside the region; the
    other lies across the diagonal of a half-hexagon.
    """

    up: Cell
    down: Cell
    protruding: bool = False

    @property
    def cells(self) -> tuple[Cell, Cell]:
        return (self.up, self.down)

    def orientation(self, m: int) -> str:
        return _sides_lozenge(self.up, self.down, m)

    def to_json(self) -> dict:
        out = {"cells": [self.up.to_json(), self.down.to_json()]}
        if self.protruding:
            out["protruding"] = True
        return out

    @classmethod
    def from_json(cls, data) -> "Lozenge":
        a, b = (Cell.from_json(c) for c in data["cells"])
        if a.orientation == DOWN:
            a, b = b, a
        return cls(a, b, bool(data.get("protruding", False)))


class TilingError(ValueError):
    pass


@dataclass(frozen=True)
class Tiling:
    region: Region
    lozenges: tuple[Lozenge, ...]

    def __post_init__(self):
        lozenges = tuple(sorted(self.lozenges))
        object.__setattr__(self, "lozenges", lozenges)
        inside = self.region.cell_set
        m = self.region.m
        seen: set[Cell] = set()
        for lz in lozenges:
            if lz.up.orientation != UP or lz.down.orientation != DOWN:
                raise TilingError(f"{lz} must pair an up cell with a down cell")
            _sides_lozenge(lz.up, lz.down, m)
            covered = [c for c in lz.cells if c in inside]
            if lz.protruding:
                if len(covered) != 1:
                    raise TilingError(f"protruding {lz} must have exactly one cell inside")
                (c,) = covered
                other = lz.down if c == lz.up else lz.up
                if other in self.region.geometry.verts or diagonal_partner(c, m) != other:
                    raise TilingError(f"{lz} does not protrude across the diagonal")
            elif len(covered) != 2:
                raise TilingError(f"{lz} is not inside the region")
            for c in covered:
                if c in seen:
                    raise TilingError(f"cell {c} covered twice")
                seen.add(c)
        if len(seen) != len(inside):
            raise TilingError(f"{len(inside) - len(seen)} cells left uncovered")

    def protruding_positions(self) -> RowSet:
        return RowSet(lz.up.index for lz in self.lozenges if lz.protruding)

    def crossing_positions(self) -> RowSet:
        """Positions of the non-protruding verticals straddling the diagonal."""
        return RowSet(lz.up.index for lz in self.lozenges
                      if not lz.protruding and lz.up.half == UPPER and lz.down.half == LOWER)

    def to_json(self) -> list[dict]:
        return [lz.to_json() for lz in self.lozenges]

    @classmethod
    def from_json(cls, region: Region, data) -> "Tiling":
        return cls(region, tuple(Lozenge.from_json(d) for d in data))


def build_half_hexagon(m: int, N: int, half: str = UPPER) -> Region:
    """Undented half-hexagon with ``m`` rows and diagonal length ``N``."""
    if not 1 <= m <= N:
        raise ValueError(f"need 1 <= m <= N, got m={m}, N={N}")
    return Region(m, 0, N) if half == UPPER else Region(0, m, N)


def build_hexagon(m: int, n: int, N: int) -> Region:
    return Region(m, n, N)


def build_dented_hexagon(m: int, n: int, N: int, u: Iterable[int], l: Iterable[int]) -> Region:
    """Hexagon minus up cells ``u`` above and down cells ``l`` below the diagonal."""
    u, l = as_rowset(u), as_rowset(l)
    if len(u) != m or len(l) != n:
        raise ValueError(f"need |U| = m and |L| = n, got {len(u)}, {m}, {len(l)}, {n}")
    top = max(u + l, default=0)
    if top > N:
        raise ValueError(f"diagonal length {N} is shorter than the largest dent {top}")
    return Region(m, n, N, u, l)


def _tile_row(cells: list[Cell], taken: set[Cell], m: int) -> list[Lozenge]:
    # free cells of one row must pair off as consecutive neighbours
    out = []
    free = [k for k, c in enumerate(cells) if c not in taken]
    if len(free) % 2:
        raise ValueError("row cannot be completed")
    for a, b in zip(free[::2], free[1::2]):
        if b != a + 1:
            raise ValueError("row cannot be completed")
        x, y = cells[a], cells[b]
        up, down = (x, y) if x.orientation == UP else (y, x)
        out.append(Lozenge(up, down))
    return out


def pattern_to_tiling(pattern: GTPattern, N: int, half: str = UPPER) -> Tiling:
    """The half-hexagon tiling whose verticals in row ``i`` sit at ``pattern[i-1]``.

    For the lower half the pattern is read in reflection: its last row lies on
    the diagonal. Bottom-row verticals come back flagged as protruding.
    """
    if not validate_pattern(pattern):
        raise ValueError(f"not a Gelfand-Tsetlin pattern: {pattern}")
    size = len(pattern)
    if pattern[-1][-1] > N:
        raise ValueError(f"entry {pattern[-1][-1]} exceeds row width {N}")
    region = build_half_hexagon(size, N, half)
    geo = region.geometry
    lozenges = []
    above: tuple[int, ...] = ()
    for i, entries in enumerate(pattern, start=1):
        if half == UPPER:
            row = geo.rows[i - 1]
            verts = [Cell(UPPER, i, j, UP) for j in entries]
            partners = [Cell(UPPER, i + 1, j, DOWN) if i < size else Cell(LOWER, 1, j, DOWN)
                        for j in entries]
            covered = {Cell(UPPER, i, j, DOWN) for j in above}
            lozenges += [Lozenge(v, p, i == size) for v, p in zip(verts, partners)]
        else:
            k = size - i + 1
            row = geo.rows[k - 1]
            verts = [Cell(LOWER, k, j, DOWN) for j in entries]
            partners = [Cell(LOWER, k - 1, j, UP) if k > 1 else Cell(UPPER, 0, j, UP)
                        for j in entries]
            covered = {Cell(LOWER, k, j, UP) for j in above}
            lozenges += [Lozenge(p, v, k == 1) for v, p in zip(verts, partners)]
        lozenges += _tile_row(row, covered | set(verts), region.m)
        above = entries
    return Tiling(region, tuple(lozenges))


def tiling_to_pattern(tiling: Tiling) -> GTPattern:
    """Read the vertical-lozenge positions of a half-hexagon tiling row by row."""
    region = tiling.region
    if region.dents_up or region.dents_down or (region.m and region.n):
        raise ValueError("tiling_to_pattern needs an undented half-hexagon")
    rows: dict[int, list[int]] = {}
    for lz in tiling.lozenges:
        if lz.orientation(region.m) != VERTICAL:
            continue
        if region.m:
            rows.setdefault(lz.up.row, []).append(lz.up.index)
        else:
            rows.setdefault(region.n - lz.down.row + 1, []).append(lz.down.index)
    size = region.m or region.n
    pattern = tuple(tuple(sorted(rows.get(i, ()))) for i in range(1, size + 1))
    if not validate_pattern(pattern):
        raise ValueError(f"tiling does not encode a pattern: {pattern}")
    return pattern


def glue_halves(upper: GTPattern, lower: GTPattern, N: int) -> Tiling:
    """Put an upper and a (reflected) lower half-hexagon tiling together.

    Equal bottom rows give a tiling of the whole hexagon, with protruding
    verticals merged across the diagonal. Otherwise the protruding verticals
    are dropped and the result tiles the dented hexagon.
    """
    m, n = len(upper), len(lower)
    top = pattern_to_tiling(upper, N, UPPER)
    bottom = pattern_to_tiling(lower, N, LOWER)
    kept = [lz for lz in top.lozenges + bottom.lozenges if not lz.protruding]
    u, l = RowSet(upper[-1]), RowSet(lower[-1])
    if u == l:
        kept += [Lozenge(Cell(UPPER, m, j, UP), Cell(LOWER, 1, j, DOWN)) for j in u]
        region = build_hexagon(m, n, N)
    else:
        region = build_dented_hexagon(m, n, N, u, l)
    return Tiling(region, tuple(kept))


class _Board:
    """Index of a region's cells for the backtracking counter."""

    def __init__(self, region: Region, forbid_crossing: Iterable[int] = (),
                 allow_protruding: bool = False):
        self.region = region
        self.cells = region.cells
        pos = {c: k for k, c in enumerate(self.cells)}
        forbid = set(forbid_crossing)
        geo = region.geometry
        self.later: list[list[int]] = []
        self.single: list[bool] = []
        for k, c in enumerate(self.cells):
            nxt = []
            for d in geo.adjacent[c]:
                q = pos.get(d)
                if q is None or q <= k:
                    continue
                if c.half != d.half and c.index in forbid:
                    continue
                nxt.append(q)
            self.later.append(nxt)
            self.single.append(allow_protruding and self._may_protrude(c))
        self.full = (1 << len(self.cells)) - 1

    def _may_protrude(self, c: Cell) -> bool:
        r = self.region
        on_diagonal = (c.half == UPPER and c.row == r.m and c.orientation == UP) or (
            c.half == LOWER and c.row == 1 and c.orientation == DOWN)
        return on_diagonal and diagonal_partner(c, r.m) not in r.geometry.verts


def _lowest_free(mask: int) -> int:
    return (~mask & (mask + 1)).bit_length() - 1


def brute_force_count(region: Region, forbid_crossing: Iterable[int] = (),
                      allow_protruding: bool | None = None) -> ExactCount:
    """Count tilings of ``region`` by backtracking on cells.

    The leftmost cell of the topmost row that is still uncovered is always
    covered next, by each lozenge that fits. Partial states are memoized on
    the set of covered cells. Crossing verticals at positions in
    ``forbid_crossing`` are not used. Makes no use of Gelfand-Tsetlin
    patterns.

    ``allow_protruding`` defaults to True exactly for half-hexagons, whose
    tilings may cover diagonal-row cells with verticals sticking out.
    """
    if allow_protruding is None:
        allow_protruding = not (region.m and region.n)
    if not allow_protruding and not region.is_balanced():
        return 0
    board = _Board(region, forbid_crossing, allow_protruding)
    later, single, full = board.later, board.single, board.full
    memo: dict[int, int] = {}

    def count(mask: int) -> int:
        if mask == full:
            return 1
        hit = memo.get(mask)
        if hit is not None:
            return hit
        p = _lowest_free(mask)
        total = count(mask | (1 << p)) if single[p] else 0
        for q in later[p]:
            bit = 1 << q
            if not mask & bit:
                total += count(mask | (1 << p) | bit)
        memo[mask] = total
        return total

    return count(0)


def enumerate_tilings(region: Region, allow_protruding: bool = False,
                      forbid_crossing: Iterable[int] = ()) -> Iterator[Tiling]:
    """Yield every tiling of ``region`` (no memoization; small regions only).

    With ``allow_protruding`` the diagonal-row cells of a half-hexagon may be
    covered by protruding verticals.
    """
    board = _Board(region, forbid_crossing, allow_protruding)
    cells, later, single, full = board.cells, board.later, board.single, board.full
    m = region.m
    chosen: list[Lozenge] = []

    def pair(a: Cell, b: Cell) -> Lozenge:
        return Lozenge(a, b) if a.orientation == UP else Lozenge(b, a)

    def walk(mask: int) -> Iterator[Tiling]:
        if mask == full:
            yield Tiling(region, tuple(chosen))
            return
        p = _lowest_free(mask)
        if single[p]:
            c = cells[p]
            lz = pair(c, diagonal_partner(c, m))
            chosen.append(Lozenge(lz.up, lz.down, True))
            yield from walk(mask | (1 << p))
            chosen.pop()
        for q in later[p]:
            if not mask & (1 << q):
                chosen.append(pair(cells[p], cells[q]))
                yield from walk(mask | (1 << p) | (1 << q))
                chosen.pop()

    yield from walk(0)


@lru_cache(maxsize=None)
def _half_count(half: str, rows: int, N: int, dents: RowSet) -> int:
    region = Region(rows, 0, N, dents) if half == UPPER else Region(0, rows, N, (), dents)
    return brute_force_count(region, allow_protruding=False)


def brute_force_count_restricted(region: Region, v: Iterable[int], b: Iterable[int]) -> ExactCount:
    """Count tilings whose diagonal-crossing verticals all sit at positions in ``b``.

    ``region`` carries the dents ``U - V`` and ``L - V``. For each admissible
    set ``W`` of crossing positions the crossing lozenges are placed and every
    other crossing is forbidden; nothing then connects the two halves, so
    the tilings with crossing set ``W`` are counted as the product of
    :func:`brute_force_count` on the two dented halves.
    """
    v, b = as_rowset(v), as_rowset(b)
    if not (region.m and region.n):
        raise ValueError("restricted counting needs both halves")
    blocked = region.dents_up | region.dents_down
    if b & blocked:
        raise ValueError(f"B meets the dent set F at {list(b & blocked)}")
    if v & blocked:
        raise ValueError("V must avoid the dents")
    if b and b[-1] > region.N:
        raise ValueError(f"B reaches {b[-1]} beyond diagonal length {region.N}")
    total = 0
    for size in range(len(b) + 1):
        for w in combinations(b, size):
            upper = _half_count(UPPER, region.m, region.N, region.dents_up | w)
            if upper:
                total += upper * _half_count(LOWER, region.n, region.N, region.dents_down | w)
    return total
