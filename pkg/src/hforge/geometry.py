"""Exact 2D predicates on rational points."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

Point = tuple[Fraction, Fraction]


def point(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def cross(u: Point, v: Point) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Point, v: Point) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def orient(a: Point, b: Point, c: Point) -> int:
    v = cross(sub(b, a), sub(c, a))
    return (v > 0) - (v < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def seg_param(p: Point, a: Point, b: Point) -> Fraction:
    """Parameter u with p = a + u (b - a), for p known to lie on the segment."""
    d = sub(b, a)
    return dot(sub(p, a), d) / dot(d, d)


Overlap = tuple[Point, Point]


def intersect(a: Point, b: Point, c: Point, d: Point) -> Union[None, Point, Overlap]:
    """Intersection of closed segments ab and cd.

    Returns ``None``, a single point, or a pair of distinct points ``(p, q)``
    bounding the shared stretch when the segments overlap.
    """
    r = sub(b, a)
    s = sub(d, c)
    denom = cross(r, s)
    qp = sub(c, a)
    if denom == 0:
        if cross(qp, r) != 0:
            return None
        # collinear: project onto r
        rr = dot(r, r)
        t0 = dot(qp, r) / rr
        t1 = t0 + dot(s, r) / rr
        lo, hi = max(min(t0, t1), Fraction(0)), min(max(t0, t1), Fraction(1))
        if lo > hi:
            return None
        p = (a[0] + lo * r[0], a[1] + lo * r[1])
        if lo == hi:
            return p
        return (p, (a[0] + hi * r[0], a[1] + hi * r[1]))
    t = cross(qp, s) / denom
    u = cross(qp, r) / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        return (a[0] + t * r[0], a[1] + t * r[1])
    return None


def is_overlap(hit) -> bool:
    return hit is not None and isinstance(hit[0], tuple)


def segment_hit_params(a, b, c, d) -> Optional[tuple[Fraction, Fraction, Point]]:
    """Single intersection point with its parameters on both segments.

    ``None`` when disjoint; raises ``ValueError`` on a collinear overlap.
    """
    hit = intersect(a, b, c, d)
    if hit is None:
        return None
    if is_overlap(hit):
        raise ValueError("collinear overlap")
    return seg_param(hit, a, b), seg_param(hit, c, d), hit
