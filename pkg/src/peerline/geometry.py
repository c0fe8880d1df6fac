"""Exact vertex enumeration for the sliced consistency cone.

The polytope of interest is {g in R^m : g >= 0, sum(g) = 1, R g <= 0} where the
rows R come from ranking adjacencies.  Vertices are built by inserting the rows
one at a time into the standard simplex (double description).  Adjacency of two
vertices is decided combinatorially: they share an edge iff no third vertex is
tight on every constraint the pair has in common.  Everything runs on
Fractions, so the output is exact.
"""

from __future__ import annotations

from fractions import Fraction

Point = tuple[Fraction, ...]
Row = tuple[int, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def _dot(row: Row, point: Point) -> Fraction:
    return sum(r * x for r, x in zip(row, point))


def slice_vertices(m: int, rows: tuple[Row, ...]) -> list[tuple[Point, frozenset[int]]]:
    """Vertices of {g >= 0, sum g = 1, rows . g <= 0} with their tight sets.

    Tight-set ids: 0..m-1 are the nonnegativity constraints, m+j is rows[j].
    Returns [] iff the polytope is empty.  m = 0 (single agent) yields [].
    """
    if m == 0:
        return []
    verts: list[tuple[Point, frozenset[int]]] = []
    for i in range(m):
        point = tuple(ONE if j == i else ZERO for j in range(m))
        verts.append((point, frozenset(j for j in range(m) if j != i)))
    for j, row in enumerate(rows):
        cid = m + j
        vals = [_dot(row, v) for v, _ in verts]
        inside = [i for i, s in enumerate(vals) if s < 0]
        tight = [i for i, s in enumerate(vals) if s == 0]
        outside = [i for i, s in enumerate(vals) if s > 0]
        if not outside:
            verts = [
                (v, t | {cid}) if vals[i] == 0 else (v, t)
                for i, (v, t) in enumerate(verts)
            ]
            continue
        fresh: list[tuple[Point, frozenset[int]]] = []
        for ik in inside:
            vk, tk = verts[ik]
            for iv in outside:
                vv, tv = verts[iv]
                common = tk & tv
                if any(
                    common <= t2
                    for i2, (_, t2) in enumerate(verts)
                    if i2 != ik and i2 != iv
                ):
                    continue  # not an edge of the current polytope
                lam = vals[iv] / (vals[iv] - vals[ik])
                point = tuple(lam * a + (1 - lam) * b for a, b in zip(vk, vv))
                fresh.append((point, common | {cid}))
        merged: dict[Point, frozenset[int]] = {}
        survivors = [(verts[i][0], verts[i][1]) for i in inside]
        survivors += [(verts[i][0], verts[i][1] | {cid}) for i in tight]
        for point, t in survivors + fresh:
            merged[point] = merged.get(point, frozenset()) | t
        verts = sorted(merged.items())
    return verts


def polytope_edges(verts: list[tuple[Point, frozenset[int]]]) -> list[tuple[int, int]]:
    """Index pairs of adjacent vertices (combinatorial adjacency test)."""
    edges = []
    for i in range(len(verts)):
        ti = verts[i][1]
        for j in range(i + 1, len(verts)):
            common = ti & verts[j][1]
            if any(
                common <= verts[k][1] for k in range(len(verts)) if k != i and k != j
            ):
                continue
            edges.append((i, j))
    return edges


def crossing_point(u: Point, v: Point, hu: Fraction, hv: Fraction) -> Point:
    """Point on segment [u, v] where a linear form with values hu, hv hits 0."""
    lam = hv / (hv - hu)
    return tuple(lam * a + (1 - lam) * b for a, b in zip(u, v))


def slice_feasible(m: int, rows: tuple[Row, ...]) -> bool:
    """True iff {g >= 0, sum g = 1, rows . g <= 0} is nonempty."""
    if m == 0:
        return True  # single agent: the empty gap vector is the whole story
    return bool(slice_vertices(m, rows))
