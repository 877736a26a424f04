"""Generators for the extremal drawings.

``build_gnk`` / ``build_gnkt`` give the polynomial drawings on vertices
1..n; ``build_planar_tight`` gives a crossing-free non-homotopic multigraph
with 4n - 4 edges; ``build_spiral_loops`` gives loops winding 1..w times.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from .drawing import MultigraphDrawing, make_edge
from .errors import GeometryConflict, InvalidParams
from .exact import Poly
from .geometry import on_segment, point
from .planar import GeneralDrawing, PolylineEdge
from .winding import ClosedPolyline

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    k: int
    t: Optional[int] = None

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise InvalidParams(f"need 1 <= k < n, got n={self.n}, k={self.k}")
        if self.t is not None and not 2 * self.k <= self.t <= self.n:
            raise InvalidParams(f"need 2k <= t <= n, got t={self.t}")


def gnk_curve(k: int, a: tuple[int, ...]) -> Poly:
    """x^(k-l) (x - a0)(x - a1 - 1/2)...(x - a_{l-1} - 1/2)(x - a_l)."""
    ell = len(a) - 1
    roots = [Fraction(a[0])] + [ai + HALF for ai in a[1:-1]] + [Fraction(a[-1])]
    roots += [Fraction(0)] * (k - ell)
    return Poly.from_roots(roots)


def edge_label(a) -> str:
    return "e" + ",".join(map(str, a))


def gnk_tuples(n: int, k: int, t: Optional[int] = None):
    for ell in range(1, k + 1):
        for a in combinations(range(1, n + 1), ell + 1):
            if t is None or a[-1] - a[0] <= t:
                yield a


def _build(params: ConstructionParams) -> MultigraphDrawing:
    xs = [Fraction(i) for i in range(1, params.n + 1)]
    edges = [
        make_edge(xs, a[0] - 1, a[-1] - 1, gnk_curve(params.k, a), edge_label(a))
        for a in gnk_tuples(params.n, params.k, params.t)
    ]
    return MultigraphDrawing(xs, edges)


def build_gnk(n: int, k: int) -> MultigraphDrawing:
    return _build(ConstructionParams(n, k))


def build_gnkt(n: int, k: int, t: int) -> MultigraphDrawing:
    return _build(ConstructionParams(n, k, t))


def gnk_edge_count(n: int, k: int) -> int:
    return sum(comb(n, ell + 1) for ell in range(1, k + 1))


def _corner_loop(x, a, b, label, idx):
    """Small triangular loop at x inside the triangle (x, a, b)."""

    def inner(wa, wb):
        return (
            x[0] + (wa * (a[0] - x[0]) + wb * (b[0] - x[0])) / 16,
            x[1] + (wa * (a[1] - x[1]) + wb * (b[1] - x[1])) / 16,
        )

    return PolylineEdge(idx, idx, [x, inner(3, 1), inner(1, 3), x], label)


def build_planar_tight(n: int) -> GeneralDrawing:
    """Plane non-homotopic multigraph on n vertices with exactly 4n - 4 edges.

    n >= 3: a stacked straight-line triangulation with outer triangle
    (u, v, w), a second uv edge routed over w, a loop at u around everything,
    and one small loop per vertex inside an incident triangle.
    """
    if n < 2:
        raise InvalidParams("planar-tight needs n >= 2")
    if n == 2:
        u, v = point(0, 0), point(2, 0)
        edges = [
            PolylineEdge(0, 1, [u, v], "uv"),
            PolylineEdge(0, 0, [u, (-1, 1), (-1, 2), u], "loop-u"),
            PolylineEdge(1, 1, [v, (3, 1), (3, 2), v], "loop-v"),
            PolylineEdge(0, 0, [u, (1, -1), (5, -1), (5, 4), (-3, 4), (-3, -1), u], "outer-u"),
        ]
        return GeneralDrawing([u, v], edges)

    u, v, w = point(0, 0), point(4, 0), point(2, n)
    inner = [point(2, n - j) for j in range(1, n - 2)]
    verts = [u, v, w] + inner
    names = ["u", "v", "w"] + [f"x{j}" for j in range(1, n - 2)]
    edges = [
        PolylineEdge(0, 1, [u, v], "u-v"),
        PolylineEdge(0, 2, [u, w], "u-w"),
        PolylineEdge(1, 2, [v, w], "v-w"),
    ]
    for j in range(len(inner)):
        vi = 3 + j
        prev = 2 if j == 0 else vi - 1
        edges.append(PolylineEdge(0, vi, [u, verts[vi]], f"u-{names[vi]}"))
        edges.append(PolylineEdge(1, vi, [v, verts[vi]], f"v-{names[vi]}"))
        edges.append(PolylineEdge(prev, vi, [verts[prev], verts[vi]], f"{names[prev]}-{names[vi]}"))
    top = n + 1
    edges.append(PolylineEdge(0, 1, [u, (-1, top), (5, top), v], "u-v-over"))
    edges.append(
        PolylineEdge(0, 0, [u, (-2, -1), (6, -1), (6, top + 1), (-2, top + 1), u], "outer-u")
    )
    # one inner triangle per vertex for its trivial loop
    bottom = 2 if not inner else len(verts) - 1
    faces = {0: (0, 1, bottom), 1: (1, 0, bottom)}
    if inner:
        faces[2] = (2, 0, 3)
        for j in range(len(inner)):
            vi = 3 + j
            faces[vi] = (vi, 0, 2 if j == 0 else vi - 1)
    else:
        faces[2] = (2, 0, 1)
    for vi in range(n):
        x, a, b = faces[vi]
        edges.append(_corner_loop(verts[x], verts[a], verts[b], f"loop-{names[vi]}", vi))
    return GeneralDrawing(verts, edges)


def _rotation(m: int):
    """Exact rotation by the angle whose half-angle tangent is 1/m."""
    den = m * m + 1
    return Fraction(m * m - 1, den), Fraction(2 * m, den)


def spiral_points(w: int) -> list:
    """Square spiral around the origin based at (1, 0), winding w times."""
    pts = [(1, 0)]
    for j in range(1, w + 1):
        pts += [(j, j), (-j, j), (-j, -j), (j + 1, -j)]
    pts.append((w + 1, 0))
    return pts


def build_spiral_loops(w_max: int, center=(0, 0), punctures=(), scale=1) -> list[ClosedPolyline]:
    """Loops L_1..L_w_max based at ``center + scale*(1, 0)``; L_w winds w times.

    Each loop is turned about the base point by its own small rational angle
    so that no two loops share a segment.
    """
    if w_max < 1:
        raise InvalidParams("w_max must be >= 1")
    cx, cy = point(*center)
    scale = Fraction(scale)
    bx, by = cx + scale, cy
    loops = []
    for w in range(1, w_max + 1):
        cos, sin = _rotation(8 + w)
        pts = []
        for x, y in spiral_points(w):
            dx, dy = (x - 1) * scale, y * scale
            pts.append((bx + cos * dx - sin * dy, by + sin * dx + cos * dy))
        loops.append(ClosedPolyline(pts))
    for q in [point(cx, cy)] + [point(*p) for p in punctures]:
        for loop in loops:
            if any(on_segment(q, a, b) for a, b in loop.segments()):
                raise GeometryConflict(f"point {q} lies on a spiral loop")
    return loops


def spiral_drawing(w_max: int, center=(0, 0), scale=1) -> GeneralDrawing:
    """Base point as vertex 1, centre as vertex 2, L_1..L_w as loops at vertex 1."""
    loops = build_spiral_loops(w_max, center, scale=scale)
    base = loops[0].points[0]
    edges = [
        PolylineEdge(0, 0, list(loop.points) + [base], f"L{w}")
        for w, loop in enumerate(loops, start=1)
    ]
    return GeneralDrawing([base, point(*center)], edges)
