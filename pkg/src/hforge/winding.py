"""Winding numbers, self-intersections and loop homotopy for closed polylines."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from math import gcd
from typing import Iterable, Sequence

from .errors import DegenerateGeometry, PointOnCurve
from .geometry import Point, cross, dot, intersect, is_overlap, on_segment, point, sub


@dataclass(frozen=True)
class ClosedPolyline:
    """Cyclic list of points; the closing segment back to ``points[0]`` is implicit."""

    points: tuple[Point, ...]

    def __init__(self, points: Iterable):
        pts = tuple(point(x, y) for x, y in points)
        if len(pts) > 1 and pts[0] == pts[-1]:
            pts = pts[:-1]
        if len(pts) < 2:
            raise DegenerateGeometry("closed polyline needs at least two distinct points")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if a == b:
                raise DegenerateGeometry("zero-length segment")
        object.__setattr__(self, "points", pts)

    def segments(self):
        pts = self.points
        return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]

    def reversed(self) -> "ClosedPolyline":
        return ClosedPolyline(self.points[:1] + tuple(reversed(self.points[1:])))

    def translated(self, dx, dy) -> "ClosedPolyline":
        return ClosedPolyline((x + dx, y + dy) for x, y in self.points)


def concat(c1: ClosedPolyline, c2: ClosedPolyline) -> ClosedPolyline:
    """Traverse ``c1`` then ``c2``; both must start at the same base point."""
    if c1.points[0] != c2.points[0]:
        raise ValueError("loops do not share a base point")
    return ClosedPolyline(c1.points + c2.points)


def _directions():
    # primitive integer directions, ring by ring
    for r in count(1):
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                if max(abs(a), abs(b)) == r and gcd(a, b) == 1:
                    yield (a, b)


def _ray_direction(origin: Point, pts: Sequence[Point]) -> Point:
    rel = [sub(q, origin) for q in pts]
    for dx, dy in _directions():
        d = (Fraction(dx), Fraction(dy))
        if not any(cross(d, v) == 0 and dot(d, v) > 0 for v in rel):
            return d
    raise AssertionError("unreachable")


def winding_number(c: ClosedPolyline, p) -> int:
    """Signed number of counterclockwise turns of ``c`` around ``p``.

    Casts a ray from ``p`` in the first direction of a fixed list that misses
    every polyline vertex, then sums signed crossings.
    """
    p = point(*p)
    segs = c.segments()
    for a, b in segs:
        if on_segment(p, a, b):
            raise PointOnCurve(f"point {p} lies on the curve")
    d = _ray_direction(p, c.points)
    total = 0
    for a, b in segs:
        oa = cross(d, sub(a, p))
        ob = cross(d, sub(b, p))
        if oa == 0 or ob == 0 or (oa > 0) == (ob > 0):
            continue
        u = oa / (oa - ob)
        hit = (a[0] + u * (b[0] - a[0]) - p[0], a[1] + u * (b[1] - a[1]) - p[1])
        if dot(d, hit) > 0:
            total += 1 if oa < 0 else -1
    return total


def self_intersections(c: ClosedPolyline) -> int:
    """Transverse self-crossings over non-adjacent segment pairs.

    Requires general position: overlapping collinear pieces, backtracking
    turns, or three segments through one point raise DegenerateGeometry.
    """
    segs = c.segments()
    m = len(segs)
    seen = set()
    total = 0
    for i in range(m):
        a, b = segs[i]
        for j in range(i + 1, m):
            c0, d0 = segs[j]
            hit = intersect(a, b, c0, d0)
            if hit is None:
                continue
            if is_overlap(hit):
                raise DegenerateGeometry(f"segments {i} and {j} overlap")
            adjacent = j == i + 1 or (i == 0 and j == m - 1)
            if adjacent:
                shared = b if j == i + 1 else a
                if hit != shared:
                    raise DegenerateGeometry(f"segments {i} and {j} fold back")
                continue
            if hit in (a, b, c0, d0):
                raise DegenerateGeometry(f"three segments meet at {hit}")
            if hit in seen:
                raise DegenerateGeometry(f"three segments meet at {hit}")
            seen.add(hit)
            total += 1
    return total


class Verdict(enum.Enum):
    HOMOTOPIC = "homotopic"
    NON_HOMOTOPIC = "non-homotopic"
    INCONCLUSIVE = "inconclusive"


def winding_vector(c: ClosedPolyline, punctures) -> tuple[int, ...]:
    return tuple(winding_number(c, q) for q in punctures)


def loop_homotopy_check(c1: ClosedPolyline, c2: ClosedPolyline, punctures) -> Verdict:
    """Compare two closed curves in the plane minus ``punctures``.

    Exact for at most one puncture; beyond that equal winding vectors are
    only the abelian shadow of the fundamental group, hence INCONCLUSIVE.
    """
    punctures = [point(*q) for q in punctures]
    w1 = winding_vector(c1, punctures)
    w2 = winding_vector(c2, punctures)
    if w1 != w2:
        return Verdict.NON_HOMOTOPIC
    if len(punctures) <= 1:
        return Verdict.HOMOTOPIC
    return Verdict.INCONCLUSIVE
