"""Exact weighted tiling counts.

The production counter is a frontier (pathwidth) dynamic program over the
dual graph: cells are swept in a fixed order and the state is the set of
already-seen cells still awaiting a partner.  The sweep runs along whichever
lattice direction keeps the frontier narrow.  All arithmetic is exact --
integer when the region carries no weights, big rationals otherwise.

``count_tilings_oracle`` is an independent exhaustive enumeration used to
cross-check the DP; it refuses regions above a cell cap.

Counts are memoized per region.  Everything here is pure; the memo table is
a plain dict whose per-key updates are atomic under the GIL, so concurrent
readers are safe after warm-up.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .lattice import LozengePlacement, Orient, TriangleCell, neighbors
from .regions import (
    Edge,
    InvalidSpec,
    Region,
    RegionSpec,
    build_region,
    edge_between,
    mirror_constant,
    mirror_edge,
    reduce_reflective,
    remove_forced_lozenges,
)

ZERO = Fraction(0)
ONE = Fraction(1)


class CapExceeded(RuntimeError):
    """Raised when an enumeration or oracle cap would be exceeded."""


@dataclass(frozen=True)
class DualGraph:
    """Planar bipartite dual of a region: one vertex per cell, one edge per
    admissible lozenge placement (barred edges excluded)."""

    vertices: tuple[TriangleCell, ...]
    edges: tuple[LozengePlacement, ...]

    @cached_property
    def adjacency(self) -> dict[TriangleCell, list[tuple[TriangleCell, Fraction]]]:
        adj: dict[TriangleCell, list[tuple[TriangleCell, Fraction]]] = {
            v: [] for v in self.vertices
        }
        for e in self.edges:
            adj[e.up].append((e.down, e.weight))
            adj[e.down].append((e.up, e.weight))
        return adj

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)


def dual_graph(region: Region) -> DualGraph:
    vertices = tuple(sorted(region.cells))
    edges = []
    for cell in vertices:
        if cell.orient is not Orient.UP:
            continue
        for nb in neighbors(cell):
            if nb not in region.cells:
                continue
            edge = (cell, nb)
            if edge in region.barred:
                continue
            edges.append(LozengePlacement(cell, nb, region.weight(edge)))
    return DualGraph(vertices, tuple(edges))


# -- frontier DP ---------------------------------------------------------------


def _sweep_order(cells) -> list[TriangleCell]:
    rows = Counter(c.layer for c in cells)
    cols = Counter(c.index for c in cells)
    if max(rows.values()) <= max(cols.values()):
        return sorted(cells)
    return sorted(cells, key=lambda c: (c.index, c.layer, c.orient))


def _dp_count(region: Region) -> Fraction:
    cells = region.cells
    if not cells:
        return ONE
    order = _sweep_order(cells)
    pos = {c: i for i, c in enumerate(order)}
    weighted = bool(region.weights)

    adj: list[list[tuple[int, Fraction]]] = [[] for _ in order]
    for cell in order:
        if cell.orient is not Orient.UP:
            continue
        for nb in neighbors(cell):
            if nb not in cells:
                continue
            edge = (cell, nb)
            if edge in region.barred:
                continue
            w = region.weight(edge)
            i, j = pos[cell], pos[nb]
            adj[i].append((j, w))
            adj[j].append((i, w))

    last = [max((j for j, _ in a), default=-1) for a in adj]
    unit = ONE if weighted else 1
    states = {0: unit}
    for i, a in enumerate(adj):
        past = [(j, w) for j, w in a if j < i]
        has_future = last[i] > i
        new: dict[int, object] = {}
        for mask, acc in states.items():
            due = [(j, w) for j, w in past if (mask >> j) & 1 and last[j] == i]
            if len(due) > 1:
                continue  # two pending cells both need this cell: dead branch
            if due:
                j, w = due[0]
                m2 = mask ^ (1 << j)
                val = acc * w if weighted else acc
                new[m2] = new.get(m2, 0) + val
            else:
                for j, w in past:
                    if (mask >> j) & 1:
                        m2 = mask ^ (1 << j)
                        val = acc * w if weighted else acc
                        new[m2] = new.get(m2, 0) + val
                if has_future:
                    m2 = mask | (1 << i)
                    new[m2] = new.get(m2, 0) + acc
        if not new:
            return ZERO
        states = new
    return Fraction(states.get(0, 0))


_COUNT_CACHE: dict[Region, Fraction] = {}


def clear_count_cache() -> None:
    _COUNT_CACHE.clear()


def count_tilings(region: Region) -> Fraction:
    """Exact weighted number of lozenge tilings (matchings of the dual graph)."""
    cached = _COUNT_CACHE.get(region)
    if cached is not None:
        return cached
    if region.untileable or not region.balanced:
        result = ZERO
    else:
        reduced, factor = remove_forced_lozenges(region)
        if reduced.untileable:
            result = ZERO
        else:
            result = factor * _dp_count(reduced)
    _COUNT_CACHE[region] = result
    return result


# -- exhaustive oracle -----------------------------------------------------------


def count_tilings_oracle(region: Region, cap: int = 60) -> Fraction:
    """Exhaustive matching enumeration; refuses regions with more than ``cap`` cells."""
    ncells = len(region.cells)
    if ncells > cap:
        raise CapExceeded(f"oracle cell cap {cap} exceeded ({ncells} cells)")
    if region.untileable or not region.balanced:
        return ZERO
    order = sorted(region.cells)
    free = set(order)
    barred = region.barred
    in_region = region.cells

    def rec(lo: int) -> Fraction:
        while lo < len(order) and order[lo] not in free:
            lo += 1
        if lo == len(order):
            return ONE
        cell = order[lo]
        free.discard(cell)
        total = ZERO
        for nb in neighbors(cell):
            if nb not in in_region or nb not in free:
                continue
            edge = edge_between(cell, nb)
            if edge in barred:
                continue
            free.discard(nb)
            sub = rec(lo + 1)
            if sub:
                total += region.weight(edge) * sub
            free.add(nb)
        free.add(cell)
        return total

    return rec(0)


# -- enumeration ------------------------------------------------------------------


@dataclass(frozen=True)
class Tiling:
    """A perfect matching of a region's dual graph."""

    placements: tuple[LozengePlacement, ...]

    @cached_property
    def pairs(self) -> frozenset[Edge]:
        return frozenset((p.up, p.down) for p in self.placements)

    @cached_property
    def weight(self) -> Fraction:
        w = ONE
        for p in self.placements:
            w *= p.weight
        return w

    def __len__(self) -> int:
        return len(self.placements)


def enumerate_tilings(region: Region, cap: int) -> list[Tiling]:
    """All tilings in deterministic order (lexicographic by first free cell).

    Raises CapExceeded as soon as more than ``cap`` tilings exist.
    """
    if region.untileable or not region.balanced:
        return []
    order = sorted(region.cells)
    free = set(order)
    barred = region.barred
    in_region = region.cells
    acc: list[LozengePlacement] = []
    out: list[Tiling] = []

    def rec(lo: int) -> None:
        while lo < len(order) and order[lo] not in free:
            lo += 1
        if lo == len(order):
            if len(out) >= cap:
                raise CapExceeded(f"tiling enumeration cap {cap} exceeded")
            out.append(Tiling(tuple(acc)))
            return
        cell = order[lo]
        free.discard(cell)
        for nb in neighbors(cell):
            if nb not in in_region or nb not in free:
                continue
            edge = edge_between(cell, nb)
            if edge in barred:
                continue
            free.discard(nb)
            acc.append(LozengePlacement(edge[0], edge[1], region.weight(edge)))
            rec(lo + 1)
            acc.pop()
            free.add(nb)
        free.add(cell)

    rec(0)
    return out


# -- reflectively symmetric counting -------------------------------------------------


def _reflective_fold(region: Region) -> Fraction:
    """Count symmetric tilings by cutting along the mirror column.

    Cells on the central column can only pair vertically among themselves in
    a symmetric tiling; once those forced lozenges are fixed, the halves tile
    independently and mirror each other, so the count is the tiling count of
    one half.
    """
    if not region.cells:
        return ONE
    k = mirror_constant(region)
    mid = k // 2
    column = sorted(
        (c for c in region.cells if c.index == mid), key=lambda c: c.layer
    )
    for i in range(0, len(column), 2):
        if i + 1 >= len(column):
            return ZERO
        a, b = column[i], column[i + 1]
        if not (
            a.orient is Orient.UP
            and b.orient is Orient.DOWN
            and b.layer == a.layer + 1
        ):
            return ZERO
        if (a, b) in region.barred:
            return ZERO
    east = frozenset(c for c in region.cells if c.index > mid)
    half = Region(
        cells=east,
        weights=tuple(
            (e, w) for e, w in region.weights if e[0] in east and e[1] in east
        ),
        barred=frozenset(e for e in region.barred if e[0] in east and e[1] in east),
    )
    return count_tilings(half)


def count_reflective(spec: RegionSpec, method: str = "reduce", cap: int = 5000) -> Fraction:
    """Number of tilings invariant under the horizontal mirror of an RS region.

    ``method="filter"`` enumerates all tilings (cap applies) and keeps the
    mirror-invariant ones; ``method="reduce"`` counts the halved hexagon the
    symmetric tilings biject onto (falling back to the cell-level fold for
    the degenerate even-y corners with no Fbar description).  Odd x admits no
    symmetric tiling.
    """
    if spec.family != "RS":
        raise InvalidSpec("count_reflective expects an RS spec")
    method = method.lower()
    if method not in ("filter", "reduce"):
        raise InvalidSpec(f"unknown method {method!r} (want 'filter' or 'reduce')")
    if spec.x % 2 == 1:
        return ZERO
    if method == "filter":
        region = build_region(spec)
        k = mirror_constant(region)
        tilings = enumerate_tilings(region, cap)
        invariant = sum(
            1
            for t in tilings
            if frozenset(mirror_edge(e, k) for e in t.pairs) == t.pairs
        )
        return Fraction(invariant)
    try:
        halved = reduce_reflective(spec)
    except InvalidSpec:
        return _reflective_fold(build_region(spec))
    return count_tilings(build_region(halved))


# -- condensation counts ---------------------------------------------------------------


def free_axis_positions(spec: RegionSpec) -> list[int]:
    """Axis positions carrying neither a dent nor a barrier."""
    occupied = set(spec.U) | set(spec.D) | set(spec.B)
    return [p for p in range(1, spec.axis_length + 1) if p not in occupied]


def kuo_counts(
    spec: RegionSpec, alpha: int, beta: int
) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]:
    """The six halved-hexagon counts entering the condensation identity.

    For a halved hexagon with free positions alpha < beta (first and last in
    the complement of U ∪ D ∪ B), returns the counts of::

        (x,   y,   U),        (x-1, y-1, U+{a,b}),
        (x-1, y,   U+{b}),    (x,   y-1, U+{a}),
        (x-1, y,   U+{a}),    (x,   y-1, U+{b}),

    which satisfy  M0*M1 == M2*M3 + M4*M5  exactly.
    """
    if spec.family not in ("F", "Fbar"):
        raise InvalidSpec("kuo_counts expects an F or Fbar spec")
    comp = free_axis_positions(spec)
    if len(comp) < 2:
        raise InvalidSpec("kuo_counts needs at least two free axis positions")
    if alpha >= beta:
        raise InvalidSpec("alpha must be strictly less than beta")
    if alpha != comp[0] or beta != comp[-1]:
        raise InvalidSpec(
            f"alpha/beta must be the first and last free positions {comp[0]},{comp[-1]}"
        )
    if spec.x < 1 or spec.y < 1:
        raise InvalidSpec("kuo_counts needs x >= 1 and y >= 1 for the shifted regions")

    def shifted(dx: int, dy: int, extra: tuple[int, ...]) -> Fraction:
        sub = RegionSpec(
            spec.family,
            x=spec.x - dx,
            y=spec.y - dy,
            U=tuple(sorted(set(spec.U) | set(extra))),
            D=spec.D,
            B=spec.B,
        )
        return count_tilings(build_region(sub))

    return (
        shifted(0, 0, ()),
        shifted(1, 1, (alpha, beta)),
        shifted(1, 0, (beta,)),
        shifted(0, 1, (alpha,)),
        shifted(1, 0, (alpha,)),
        shifted(0, 1, (beta,)),
    )
