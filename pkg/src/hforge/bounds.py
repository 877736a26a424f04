"""Closed-form edge and crossing bounds, and checks of drawings against them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb
from typing import Optional, Union

from .errors import InvalidParams

DIGITS = 50


class BoundKind(enum.Enum):
    THM1 = "Thm1"
    THM2A = "Thm2a"
    THM2B = "Thm2b"
    THM2C = "Thm2c"
    PROP24 = "Prop24"
    CROSS_ALL = "CrossLB_all"
    CROSS_INCIDENT = "CrossLB_incident"
    CROSS_PARALLEL = "CrossLB_parallel"


EDGE_KINDS = (BoundKind.THM1, BoundKind.THM2A, BoundKind.THM2B, BoundKind.THM2C, BoundKind.PROP24)
CROSS_KINDS = (BoundKind.CROSS_ALL, BoundKind.CROSS_INCIDENT, BoundKind.CROSS_PARALLEL)


def edge_bound(kind: BoundKind, n: int, k: int = 0) -> int:
    """Exact maximum edge count allowed by the bound ``kind``."""
    kind = BoundKind(kind)
    if kind is BoundKind.THM1:
        if n < 1 or k < 1:
            raise InvalidParams("Thm1 needs n, k >= 1")
        return 6 ** (13 * n * (k + 1))
    if kind is BoundKind.PROP24:
        if n < 2:
            raise InvalidParams("Prop24 needs n >= 2")
        return 4 * n - 4
    if kind in (BoundKind.THM2A, BoundKind.THM2B, BoundKind.THM2C):
        if not 0 <= k < n:
            raise InvalidParams("Thm2 needs 0 <= k < n")
        c = comb(2 * n, k + 1)
        factor = {BoundKind.THM2A: 2, BoundKind.THM2B: n, BoundKind.THM2C: n * (n - 1)}[kind]
        return factor * c
    raise InvalidParams(f"{kind.value} is not an edge bound")


def _iroot(x: int, b: int) -> Optional[int]:
    """Exact integer b-th root of x >= 0, or None."""
    if x < 2:
        return x
    # Newton from a start above the root
    r = 1 << (x.bit_length() // b + 1)
    while r**b > x:
        r = ((b - 1) * r + x // r ** (b - 1)) // b
    while (r + 1) ** b <= x:
        r += 1
    return r if r**b == x else None


@dataclass(frozen=True)
class ScaleValue:
    """``m^(2+1/b) / n^(1+1/b)``; ``exact`` is set when the value is rational."""

    exact: Optional[Fraction]
    approx: Decimal
    digits: int = DIGITS

    def __str__(self):
        if self.exact is not None:
            q = self.exact
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        return f"{self.approx}"


def exponent_base(kind: BoundKind, k: int) -> int:
    kind = BoundKind(kind)
    shift = {BoundKind.CROSS_ALL: 0, BoundKind.CROSS_INCIDENT: 1, BoundKind.CROSS_PARALLEL: 2}
    if kind not in shift:
        raise InvalidParams(f"{kind.value} is not a crossing bound")
    b = k + shift[kind]
    if b < 1:
        raise InvalidParams("exponent 1/k undefined for k = 0 on all pairs")
    return b


def crossing_lb_scale(kind: BoundKind, m: int, n: int, k: int) -> ScaleValue:
    """Scale term of the crossing lower bound, without its unknown constant."""
    b = exponent_base(kind, k)
    if n < 1 or m < 4 * n:
        raise InvalidParams("crossing lower bounds need m >= 4n")
    # (m^(2b+1) / n^(b+1))^(1/b)
    q = Fraction(m ** (2 * b + 1), n ** (b + 1))
    num, den = _iroot(q.numerator, b), _iroot(q.denominator, b)
    with localcontext() as ctx:
        ctx.prec = DIGITS + 15
        if num is not None and den is not None:
            exact = Fraction(num, den)
            approx = Decimal(num) / Decimal(den)
        else:
            exact = None
            approx = ((Decimal(q.numerator).ln() - Decimal(q.denominator).ln()) / b).exp()
        ctx.prec = DIGITS
        approx = +approx
    return ScaleValue(exact, approx)


@dataclass
class BoundRow:
    kind: str
    n: int
    k: Optional[int]
    bound: Union[int, str]
    observed: Union[int, str]
    verdict: str

    def cells(self) -> list[str]:
        return [self.kind, str(self.n), "" if self.k is None else str(self.k), str(self.bound), str(self.observed), self.verdict]


BOUND_HEADER = ["kind", "n", "k", "bound", "observed", "verdict"]


def _edge_row(kind, n, k, m) -> Optional[BoundRow]:
    try:
        b = edge_bound(kind, n, k)
    except InvalidParams:
        return None
    shown = b if kind is not BoundKind.THM1 else f"6^{13 * n * (k + 1)}"
    return BoundRow(kind.value, n, k, shown, m, "ok" if m <= b else "VIOLATED")


def check_monotone_against_bounds(n: int, m: int, k: int, report, claimed_k: Optional[int] = None) -> list[BoundRow]:
    """Rows comparing a monotone drawing's edge count with the edge bounds.

    ``k`` is the crossing parameter the drawing is checked at; ``report``
    supplies observed class maxima for the incident/parallel variants.
    """
    rows = []
    if claimed_k is not None:
        obs = report.max_all if report.max_all is not None else 0
        rows.append(BoundRow("max-crossings", n, claimed_k, claimed_k, obs, "ok" if obs <= claimed_k else "VIOLATED"))
    k_inc = report.max_incident if report.max_incident is not None else 0
    k_par = report.max_parallel if report.max_parallel is not None else 0
    # sequences of length n never cross more than n - 1 times
    cap = max(n - 1, 0)
    for kind, kk in (
        (BoundKind.THM1, max(k, 1)),
        (BoundKind.THM2A, min(k, cap)),
        (BoundKind.THM2B, min(k_inc, cap)),
        (BoundKind.THM2C, min(k_par, cap)),
    ):
        row = _edge_row(kind, n, kk, m)
        if row is not None:
            rows.append(row)
    if m >= 4 * n and k >= 1:
        scale = crossing_lb_scale(BoundKind.CROSS_ALL, m, n, k)
        ratio = Fraction(report.total) / scale.exact if scale.exact is not None else Decimal(report.total) / scale.approx
        rows.append(BoundRow("crossings/scale", n, k, str(scale), report.total, f"ratio={_fmt_ratio(ratio)}"))
    return rows


def _fmt_ratio(r) -> str:
    if isinstance(r, Fraction):
        with localcontext() as ctx:
            ctx.prec = 12
            return str(Decimal(r.numerator) / Decimal(r.denominator))
    with localcontext() as ctx:
        ctx.prec = 12
        return str(+r)


def check_general_against_bounds(n: int, m: int, report) -> list[BoundRow]:
    """4n - 4 for crossing-free drawings, and the 6^(13n(k+1)) bound at the observed crossing level."""
    rows = []
    if report.total == 0 and n >= 2:
        rows.append(_edge_row(BoundKind.PROP24, n, 0, m))
    k = max(1, report.max_all or 0, report.max_self)
    rows.append(_edge_row(BoundKind.THM1, n, k, m))
    return rows


def check_construction_against_bounds(d, k: int):
    """Bound rows for a drawing checked at crossing parameter ``k``."""
    from .drawing import MultigraphDrawing, crossing_report
    from .planar import general_crossing_report

    if isinstance(d, MultigraphDrawing):
        rep = crossing_report(d)
        return check_monotone_against_bounds(d.n, len(d.edges), k, rep, claimed_k=k)
    rep = general_crossing_report(d)
    return check_general_against_bounds(d.n, len(d.edges), rep)


def crossing_ratio_scan(n: int, k: int, ts) -> list[tuple[int, int, Fraction, int]]:
    """(t, crossings, crossings / (n t^(2k+1)), edges) for each G_{n,k,t}."""
    from .construct import build_gnkt
    from .drawing import crossing_report

    rows = []
    for t in ts:
        d = build_gnkt(n, k, t)
        total = crossing_report(d).total
        rows.append((t, total, Fraction(total, n * t ** (2 * k + 1)), len(d.edges)))
    return rows
