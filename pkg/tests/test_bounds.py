from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hforge.bounds import (
    BoundKind,
    check_construction_against_bounds,
    crossing_lb_scale,
    crossing_ratio_scan,
    edge_bound,
)
from hforge.construct import build_gnk, build_planar_tight
from hforge.drawing import MultigraphDrawing, make_edge
from hforge.errors import InvalidParams
from hforge.exact import Poly


def test_edge_bound_examples():
    assert edge_bound(BoundKind.THM2A, 3, 1) == 30
    assert edge_bound(BoundKind.PROP24, 5) == 16
    assert edge_bound(BoundKind.THM1, 1, 1) == 6**26
    assert edge_bound("Thm2b", 4, 2) == 4 * comb(8, 3)
    assert edge_bound("Thm2c", 4, 2) == 12 * comb(8, 3)


@pytest.mark.parametrize(
    "kind,n,k",
    [("Thm1", 0, 1), ("Thm1", 2, 0), ("Thm2a", 3, 3), ("Thm2b", 3, -1), ("Prop24", 1, 0), ("CrossLB_all", 5, 1)],
)
def test_edge_bound_ranges(kind, n, k):
    with pytest.raises(InvalidParams):
        edge_bound(kind, n, k)


@given(st.integers(3, 40), st.integers(0, 39))
def test_thm2_ordering(n, k):
    k = k % n
    a, b, c = (edge_bound(kind, n, k) for kind in ("Thm2a", "Thm2b", "Thm2c"))
    assert a <= b <= c


@given(st.integers(1, 50))
def test_scale_at_4n_is_64n(n):
    s = crossing_lb_scale(BoundKind.CROSS_ALL, 4 * n, n, 1)
    assert s.exact == 64 * n


@given(st.integers(1, 12), st.integers(1, 3), st.integers(2, 6))
def test_scale_identity(n, k, t):
    m = n * t**k
    if m < 4 * n:
        return
    s = crossing_lb_scale(BoundKind.CROSS_ALL, m, n, k)
    assert s.exact == n * t ** (2 * k + 1)


def test_scale_identity_symbolic():
    n, t, k = sympy.symbols("n t k", positive=True)
    lhs = (n * t**k) ** (2 + 1 / k) / n ** (1 + 1 / k)
    assert sympy.simplify(sympy.powsimp(sympy.expand_power_base(lhs, force=True), force=True) - n * t ** (2 * k + 1)) == 0


@given(st.integers(1, 10), st.integers(0, 3), st.integers(0, 200), st.sampled_from(list(BoundKind)[5:]))
def test_scale_monotone_in_m(n, k, dm, kind):
    try:
        a = crossing_lb_scale(kind, 4 * n + dm, n, k)
    except InvalidParams:
        assert kind is BoundKind.CROSS_ALL and k == 0
        return
    b = crossing_lb_scale(kind, 4 * n + dm + 1, n, k)
    assert a.approx < b.approx


def test_scale_irrational_digits():
    s = crossing_lb_scale(BoundKind.CROSS_INCIDENT, 400, 40, 1)
    assert s.exact is None
    # 400^(5/2) / 40^(3/2) = 10^(7/2) * 4 = 4000 sqrt(10)
    want = 4000 * sympy.sqrt(10)
    assert abs(sympy.Rational(str(s.approx)) - want) < sympy.Rational(1, 10**44)
    assert len(s.approx.as_tuple().digits) == 50
    with pytest.raises(InvalidParams):
        crossing_lb_scale(BoundKind.CROSS_ALL, 39, 10, 1)


def test_construction_rows():
    rows = {r.kind: r for r in check_construction_against_bounds(build_gnk(6, 2), 2)}
    assert rows["Thm2a"].bound == 440 and rows["Thm2a"].observed == 35
    assert all(r.verdict == "ok" for k, r in rows.items() if k != "crossings/scale")
    rows = {r.kind: r for r in check_construction_against_bounds(build_planar_tight(5), 0)}
    assert rows["Prop24"].bound == rows["Prop24"].observed == 16


def test_overfull_drawing_flagged():
    # nine nested arcs between two adjacent vertices: pairwise homotopic, no crossings
    xs = [1, 2]
    edges = [make_edge(xs, 0, 1, Poly.from_roots([1, 2], c), f"c{c}") for c in range(1, 10)]
    rows = {r.kind: r for r in check_construction_against_bounds(MultigraphDrawing(xs, edges), 0)}
    assert rows["Thm2a"].bound == 2 * comb(4, 1) == 8
    assert rows["Thm2a"].verdict == "VIOLATED"


def test_ratio_scan_window():
    rows = crossing_ratio_scan(24, 1, [2, 4, 6])
    ratios = [r[2] for r in rows]
    assert all(isinstance(r, Fraction) and r > 0 for r in ratios)
    assert max(ratios) / min(ratios) <= 8
    assert [r[3] for r in rows] == [sum(24 - s for s in range(1, t + 1)) for t in (2, 4, 6)]
