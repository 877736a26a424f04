"""Monotone drawings: vertices on the x-axis, polynomial edges.

Vertex and edge indices are 0-based in memory and 1-based in files.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import EdgeThroughVertex, IdenticalCurves, InvalidDrawing
from .exact import Poly, count_roots_open


@dataclass(frozen=True)
class MonotoneEdge:
    tail: int
    head: int
    curve: Poly
    lo: Fraction
    hi: Fraction
    label: str = ""

    @property
    def ends(self) -> tuple[int, int]:
        return (self.tail, self.head)


@dataclass(frozen=True)
class MultigraphDrawing:
    vertices: tuple[Fraction, ...]
    edges: tuple[MonotoneEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(Fraction(x) for x in self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        validate_drawing(self)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edge(self, tail: int, head: int, curve: Poly, label: str = "") -> MonotoneEdge:
        """Edge between two vertices of this drawing, domain taken from their x."""
        return MonotoneEdge(tail, head, curve, self.vertices[tail], self.vertices[head], label)


def make_edge(vertices, tail: int, head: int, curve: Poly, label: str = "") -> MonotoneEdge:
    return MonotoneEdge(tail, head, curve, Fraction(vertices[tail]), Fraction(vertices[head]), label)


def validate_drawing(d: MultigraphDrawing) -> None:
    xs = d.vertices
    if any(a >= b for a, b in zip(xs, xs[1:])):
        raise InvalidDrawing("vertex x-coordinates must be strictly increasing")
    for e in d.edges:
        if not 0 <= e.tail < e.head < len(xs):
            raise InvalidDrawing(f"edge {e.label!r}: need 0 <= tail < head < {len(xs)}")
        if e.lo != xs[e.tail] or e.hi != xs[e.head]:
            raise InvalidDrawing(f"edge {e.label!r}: domain does not match its end-vertices")
        if e.curve(e.lo) != 0 or e.curve(e.hi) != 0:
            raise InvalidDrawing(f"edge {e.label!r}: curve misses an end-vertex")
        for v in range(e.tail + 1, e.head):
            if e.curve(xs[v]) == 0:
                raise EdgeThroughVertex(f"edge {e.label!r} passes through vertex {v + 1}")


def edge_cross_count(e: MonotoneEdge, f: MonotoneEdge) -> int:
    """Distinct crossing points of two monotone edges.

    Only x strictly inside both domains counts: a shared end-vertex sits at
    parameter 0 or 1 and is not a crossing.
    """
    lo, hi = max(e.lo, f.lo), min(e.hi, f.hi)
    if lo >= hi:
        return 0
    diff = e.curve - f.curve
    if diff.is_zero():
        raise IdenticalCurves(e.label, f.label)
    return count_roots_open(diff, lo, hi)


def encode_edge(d: MultigraphDrawing, e: MonotoneEdge) -> str:
    out = ["*"] * d.n
    out[e.tail] = out[e.head] = "0"
    for v in range(e.tail + 1, e.head):
        y = e.curve(d.vertices[v])
        if y == 0:
            raise EdgeThroughVertex(f"edge {e.label!r} passes through vertex {v + 1}")
        out[v] = "+" if y > 0 else "-"
    return "".join(out)


def encode(d: MultigraphDrawing) -> list[str]:
    """One monotone drawing sequence per edge, in edge order."""
    return [encode_edge(d, e) for e in d.edges]


def verify_nonhomotopic(d: MultigraphDrawing) -> list[tuple[str, str]]:
    """Parallel edge pairs whose sign sequences agree (i.e. homotopic pairs).

    For x-monotone arcs the side of each intervening vertex fixes the
    homotopy class, so equal sequences mean homotopic edges.
    """
    codes = encode(d)
    groups: dict[tuple[int, int], list[int]] = {}
    for i, e in enumerate(d.edges):
        groups.setdefault(e.ends, []).append(i)
    bad = []
    for idx in groups.values():
        for i, j in combinations(idx, 2):
            e, f = d.edges[i], d.edges[j]
            if e.curve == f.curve:
                raise IdenticalCurves(e.label, f.label)
            if codes[i] == codes[j]:
                bad.append((e.label, f.label))
    return bad


def pair_class(e: MonotoneEdge, f: MonotoneEdge) -> str:
    if e.ends == f.ends:
        return "parallel"
    if set(e.ends) & set(f.ends):
        return "incident"
    return "disjoint"


@dataclass
class CrossingReport:
    """Pairwise crossing counts for every unordered pair of edges.

    Class maxima are ``None`` when the class has no pairs. ``max_incident``
    ranges over every pair sharing an end-vertex, parallel pairs included.
    """

    counts: dict[tuple[int, int], int] = field(default_factory=dict)
    total: int = 0
    max_all: Optional[int] = None
    max_incident: Optional[int] = None
    max_parallel: Optional[int] = None

    def count(self, i: int, j: int) -> int:
        return self.counts[(min(i, j), max(i, j))]

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {p: c for p, c in self.counts.items() if c}


def _max(a, b):
    return b if a is None or b > a else a


def _count_chunk(args):
    edges, pairs = args
    return [edge_cross_count(edges[i], edges[j]) for i, j in pairs]


def worker_count() -> int:
    raw = os.environ.get("HFORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def crossing_report(d: MultigraphDrawing, workers: Optional[int] = None) -> CrossingReport:
    edges = d.edges
    pairs = list(combinations(range(len(edges)), 2))
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(pairs) > 5000:
        from concurrent.futures import ProcessPoolExecutor

        step = -(-len(pairs) // (4 * workers))
        chunks = [(edges, pairs[s : s + step]) for s in range(0, len(pairs), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = [c for part in pool.map(_count_chunk, chunks) for c in part]
    else:
        values = _count_chunk((edges, pairs))
    rep = CrossingReport()
    for (i, j), c in zip(pairs, values):
        rep.counts[(i, j)] = c
        rep.total += c
        rep.max_all = _max(rep.max_all, c)
        kind = pair_class(edges[i], edges[j])
        if kind != "disjoint":
            rep.max_incident = _max(rep.max_incident, c)
        if kind == "parallel":
            rep.max_parallel = _max(rep.max_parallel, c)
    return rep
