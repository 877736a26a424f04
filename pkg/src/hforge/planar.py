"""Drawings with polyline edges and loops, vertices anywhere in the plane."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import IdenticalCurves, InvalidDrawing
from .geometry import Point, intersect, is_overlap, on_segment, point, seg_param
from .winding import ClosedPolyline, winding_vector


@dataclass(frozen=True)
class PolylineEdge:
    tail: int
    head: int
    points: tuple[Point, ...]
    label: str = ""

    def __init__(self, tail, head, points, label=""):
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "points", tuple(point(x, y) for x, y in points))
        object.__setattr__(self, "label", label)

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    @property
    def ends(self) -> tuple[int, int]:
        return (min(self.tail, self.head), max(self.tail, self.head))

    def segments(self):
        return list(zip(self.points, self.points[1:]))


@dataclass(frozen=True)
class GeneralDrawing:
    vertices: tuple[Point, ...]
    edges: tuple[PolylineEdge, ...]

    def __init__(self, vertices, edges):
        object.__setattr__(self, "vertices", tuple(point(x, y) for x, y in vertices))
        object.__setattr__(self, "edges", tuple(edges))
        validate_general(self)

    @property
    def n(self) -> int:
        return len(self.vertices)


def validate_general(d: GeneralDrawing) -> None:
    if len(set(d.vertices)) != len(d.vertices):
        raise InvalidDrawing("vertices must be distinct points")
    for e in d.edges:
        if not (0 <= e.tail < d.n and 0 <= e.head < d.n):
            raise InvalidDrawing(f"edge {e.label!r}: bad end-vertex index")
        pts = e.points
        if len(pts) < 2 or (e.is_loop and len(pts) < 4):
            raise InvalidDrawing(f"edge {e.label!r}: too few points")
        if pts[0] != d.vertices[e.tail] or pts[-1] != d.vertices[e.head]:
            raise InvalidDrawing(f"edge {e.label!r}: polyline does not join its end-vertices")
        if any(a == b for a, b in zip(pts, pts[1:])):
            raise InvalidDrawing(f"edge {e.label!r}: zero-length segment")
        segs = e.segments()
        for vi, v in enumerate(d.vertices):
            for si, (a, b) in enumerate(segs):
                if not on_segment(v, a, b):
                    continue
                at_start = si == 0 and v == a and vi == e.tail
                at_end = si == len(segs) - 1 and v == b and vi == e.head
                if not (at_start or at_end):
                    raise InvalidDrawing(f"edge {e.label!r} passes through vertex {vi + 1}")


def _hits(e: PolylineEdge, f: PolylineEdge, same: bool) -> set:
    """Parameter pairs (global, normalised) where e meets f, interiors only."""
    se, sf = e.segments(), f.segments()
    le, lf = len(se), len(sf)
    out = set()

    def norm(i, u, last):
        if u == 1 and i < last:
            return (i + 1, Fraction(0))
        return (i, u)

    for i, (a, b) in enumerate(se):
        for j, (c, d) in enumerate(sf):
            if same and j <= i:
                continue
            hit = intersect(a, b, c, d)
            if hit is None:
                continue
            if is_overlap(hit):
                if same and j == i + 1:
                    raise InvalidDrawing(f"edge {e.label!r} folds back on itself")
                raise IdenticalCurves(e.label, f.label)
            pe = norm(i, seg_param(hit, a, b), le - 1)
            pf = norm(j, seg_param(hit, c, d), lf - 1)
            if pe in ((0, 0), (le - 1, 1)) or pf in ((0, 0), (lf - 1, 1)):
                continue
            if same and pe == pf:
                continue
            out.add((pe, pf) if not same or pe < pf else (pf, pe))
    return out


def polyline_cross_count(e: PolylineEdge, f: PolylineEdge) -> int:
    return len(_hits(e, f, same=False))


def edge_self_intersections(e: PolylineEdge) -> int:
    return len(_hits(e, e, same=True))


@dataclass
class GeneralReport:
    counts: dict[tuple[int, int], int] = field(default_factory=dict)
    self_counts: list[int] = field(default_factory=list)
    total: int = 0
    max_all: Optional[int] = None
    max_incident: Optional[int] = None
    max_parallel: Optional[int] = None

    @property
    def max_self(self) -> int:
        return max(self.self_counts, default=0)


def general_crossing_report(d: GeneralDrawing) -> GeneralReport:
    rep = GeneralReport()
    for i, j in combinations(range(len(d.edges)), 2):
        e, f = d.edges[i], d.edges[j]
        c = polyline_cross_count(e, f)
        rep.counts[(i, j)] = c
        rep.total += c
        rep.max_all = c if rep.max_all is None else max(rep.max_all, c)
        if set(e.ends) & set(f.ends):
            rep.max_incident = c if rep.max_incident is None else max(rep.max_incident, c)
        if e.ends == f.ends:
            rep.max_parallel = c if rep.max_parallel is None else max(rep.max_parallel, c)
    rep.self_counts = [edge_self_intersections(e) for e in d.edges]
    return rep


def closed_pair(e: PolylineEdge, f: PolylineEdge) -> ClosedPolyline:
    """The closed curve ``e`` followed by ``f`` reversed (parallel edges only)."""
    fp = f.points if f.tail == e.tail else tuple(reversed(f.points))
    return ClosedPolyline(e.points[:-1] + tuple(reversed(fp[1:])))


@dataclass
class HomotopyWitness:
    first: str
    second: str
    punctures: list[int]
    winding: tuple[int, ...]
    verdict: str


def nonhomotopy_witnesses(d: GeneralDrawing) -> list[HomotopyWitness]:
    """Winding vector of ``e * f^-1`` about every other vertex, per parallel pair.

    A nonzero entry certifies the pair is non-homotopic. With at most one
    other vertex an all-zero vector certifies the pair homotopic; otherwise
    it is inconclusive.
    """
    groups: dict[tuple[int, int], list[int]] = {}
    for i, e in enumerate(d.edges):
        groups.setdefault(e.ends, []).append(i)
    out = []
    for (a, b), idx in sorted(groups.items()):
        others = [v for v in range(d.n) if v not in (a, b)]
        for i, j in combinations(idx, 2):
            e, f = d.edges[i], d.edges[j]
            vec = winding_vector(closed_pair(e, f), [d.vertices[v] for v in others])
            if any(vec):
                verdict = "non-homotopic"
            elif len(others) <= 1:
                verdict = "homotopic"
            else:
                verdict = "inconclusive"
            out.append(HomotopyWitness(e.label, f.label, [v + 1 for v in others], vec, verdict))
    return out
