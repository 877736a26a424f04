"""``hforge`` command line: construct, verify, encode, maxfamily, bounds, render.

Tables go to stdout as tab-separated text with a header row. The last line of
every run is a summary such as ``result<TAB>pass<TAB>checks=7<TAB>failures=0``.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Optional

from . import io as hio
from .bounds import (
    BOUND_HEADER,
    BoundKind,
    _fmt_ratio,
    check_general_against_bounds,
    check_monotone_against_bounds,
    crossing_lb_scale,
    crossing_ratio_scan,
    edge_bound,
)
from .construct import build_gnk, build_gnkt, build_planar_tight, spiral_drawing
from .drawing import MultigraphDrawing, crossing_report, encode, verify_nonhomotopic
from .errors import HForgeError, IdenticalCurves, InvalidParams, ParseError, ResourceLimit
from .planar import general_crossing_report, nonhomotopy_witnesses
from .render import render_svg
from .sequences import DEFAULT_BUDGET, check_recurrence, cross_count, is_valid, max_family

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    path: Optional[str] = None
    out: Optional[str] = None
    budget: int = DEFAULT_BUDGET
    samples: int = 64


class Output:
    """Collects tab-separated rows and the pass/fail tally for one run."""

    def __init__(self, stream):
        self.stream = stream
        self.checks = 0
        self.failures = 0

    def row(self, *cells):
        self.stream.write("\t".join("" if c is None else str(c) for c in cells) + "\n")

    def blank(self):
        self.stream.write("\n")

    def check(self, ok: bool) -> bool:
        self.checks += 1
        if not ok:
            self.failures += 1
        return ok

    def summary(self, status=None, **extra):
        if status is None:
            status = "pass" if self.failures == 0 else "fail"
        cells = ["result", status, f"checks={self.checks}", f"failures={self.failures}"]
        cells += [f"{k}={v}" for k, v in extra.items()]
        self.row(*cells)


def _opt(v):
    return "" if v is None else v


# construct ------------------------------------------------------------------

STATS_HEADER = ["kind", "n", "k", "t", "edges", "crossings", "max_all", "max_incident", "max_parallel", "max_self"]


def _build(cfg: RunConfig):
    p = cfg.params
    kind = p["kind"]
    if kind in ("gnk", "gnkt"):
        if p["n"] is None or p["k"] is None:
            raise InvalidParams(f"{kind} needs --n and --k")
        if kind == "gnk":
            return build_gnk(p["n"], p["k"])
        if p["t"] is None:
            raise InvalidParams("gnkt needs --t")
        return build_gnkt(p["n"], p["k"], p["t"])
    if kind == "planar-tight":
        if p["n"] is None:
            raise InvalidParams("planar-tight needs --n")
        return build_planar_tight(p["n"])
    w = p["w"] if p["w"] is not None else p["n"]
    if w is None:
        raise InvalidParams("spirals needs --w (or --n)")
    return spiral_drawing(w)


def cmd_construct(cfg: RunConfig, out: Output) -> int:
    d = _build(cfg)
    text = hio.dumps(d)
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
        table = out
    else:
        sys.stdout.write(text)
        table = Output(sys.stderr)
    if isinstance(d, MultigraphDrawing):
        rep = crossing_report(d)
        self_max = 0
    else:
        rep = general_crossing_report(d)
        self_max = rep.max_self
    p = cfg.params
    table.row(*STATS_HEADER)
    table.row(
        p["kind"], d.n, _opt(p.get("k")), _opt(p.get("t")), len(d.edges), rep.total,
        _opt(rep.max_all), _opt(rep.max_incident), _opt(rep.max_parallel), self_max,
    )
    table.summary("ok", edges=len(d.edges))
    return EXIT_OK


# verify ---------------------------------------------------------------------


def _verify_monotone(d: MultigraphDrawing, k: Optional[int], out: Output) -> None:
    try:
        rep = crossing_report(d)
        homotopic = verify_nonhomotopic(d)
    except IdenticalCurves as exc:
        out.check(False)
        out.row("failure", "IdenticalCurves", *exc.pair)
        return
    out.row("n", "edges", "crossings", "max_all", "max_incident", "max_parallel")
    out.row(d.n, len(d.edges), rep.total, _opt(rep.max_all), _opt(rep.max_incident), _opt(rep.max_parallel))
    out.blank()

    out.row("check", "detail", "verdict")
    out.check(not homotopic)
    out.row("nonhomotopic", f"homotopic_pairs={len(homotopic)}", "ok" if not homotopic else "FAIL")
    for a, b in homotopic:
        out.row("homotopic", f"{a}|{b}", "FAIL")

    codes = encode(d)
    bad_codes = [e.label for e, c in zip(d.edges, codes) if not is_valid(c)]
    out.check(not bad_codes)
    out.row("encode-valid", f"invalid={len(bad_codes)}", "ok" if not bad_codes else "FAIL")

    # sign sequences never cross more often than the curves themselves
    over = [(i, j) for (i, j), c in rep.counts.items() if cross_count(codes[i], codes[j]) > c]
    out.check(not over)
    out.row("sequence<=geometric", f"violations={len(over)}", "ok" if not over else "FAIL")
    out.blank()

    level = k if k is not None else (rep.max_all or 0)
    out.row(*BOUND_HEADER)
    for r in check_monotone_against_bounds(d.n, len(d.edges), level, rep, claimed_k=level):
        if r.verdict in ("ok", "VIOLATED"):
            out.check(r.verdict == "ok")
        out.row(*r.cells())


def _verify_general(d, out: Output) -> None:
    try:
        rep = general_crossing_report(d)
        witnesses = nonhomotopy_witnesses(d)
    except IdenticalCurves as exc:
        out.check(False)
        out.row("failure", "IdenticalCurves", *exc.pair)
        return
    out.row("n", "edges", "crossings", "max_all", "max_incident", "max_parallel", "max_self")
    out.row(d.n, len(d.edges), rep.total, _opt(rep.max_all), _opt(rep.max_incident), _opt(rep.max_parallel), rep.max_self)
    out.blank()

    out.row("first", "second", "punctures", "winding", "verdict")
    for w in witnesses:
        # inconclusive counts as a failure: nothing certifies the pair
        out.check(w.verdict == "non-homotopic")
        out.row(w.first, w.second, ",".join(map(str, w.punctures)), ",".join(map(str, w.winding)), w.verdict)
    out.blank()

    out.row(*BOUND_HEADER)
    for r in check_general_against_bounds(d.n, len(d.edges), rep):
        out.check(r.verdict == "ok")
        out.row(*r.cells())


def cmd_verify(cfg: RunConfig, out: Output) -> int:
    try:
        d = hio.load(cfg.path)
    except ParseError:
        raise
    except HForgeError as exc:
        out.check(False)
        out.row("failure", type(exc).__name__, str(exc))
        out.summary()
        return EXIT_FAIL
    if isinstance(d, MultigraphDrawing):
        _verify_monotone(d, cfg.params.get("k"), out)
    else:
        _verify_general(d, out)
    out.summary()
    return EXIT_OK if out.failures == 0 else EXIT_FAIL


# encode ---------------------------------------------------------------------


def cmd_encode(cfg: RunConfig, out: Output) -> int:
    d = hio.load(cfg.path)
    if not isinstance(d, MultigraphDrawing):
        raise InvalidParams("encode needs a drawing with polynomial edges")
    codes = encode(d)
    lines = ["label\ttail\thead\tsequence"]
    lines += [f"{e.label}\t{e.tail + 1}\t{e.head + 1}\t{c}" for e, c in zip(d.edges, codes)]
    text = "\n".join(lines) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        out.stream.write(text)
    valid = sum(map(is_valid, codes))
    out.check(valid == len(codes))
    out.summary(edges=len(codes), distinct=len(set(codes)))
    return EXIT_OK if out.failures == 0 else EXIT_FAIL


# maxfamily ------------------------------------------------------------------

FAMILY_HEADER = ["n", "k", "g", "witness_count", "exact", "nodes", "vertices"]


def _family_row(out: Output, r) -> None:
    out.row(r.n, r.k, r.size, len(r.witness), "true" if r.exact else "false", r.nodes, r.vertices)


def cmd_maxfamily(cfg: RunConfig, out: Output) -> int:
    p = cfg.params
    n, k = p["n"], p["k"]
    if n is None or k is None:
        raise InvalidParams("maxfamily needs --n and --k")
    if n < 1:
        raise InvalidParams("n must be >= 1")
    cells = [(nn, kk) for nn in range(1, n + 1) for kk in range(0, k + 1)] if p["table"] else [(n, k)]
    out.row(*FAMILY_HEADER)
    results = []
    status = None
    for nn, kk in cells:
        try:
            r = max_family(nn, kk, budget=cfg.budget)
        except ResourceLimit as exc:
            _family_row(out, exc.partial)
            results.append(exc.partial)
            status = "resource-limit"
            break
        _family_row(out, r)
        results.append(r)

    if cfg.out:
        lines = ["n\tk\tsequence"] + [f"{r.n}\t{r.k}\t{s}" for r in results for s in r.witness]
        Path(cfg.out).write_text("\n".join(lines) + "\n", encoding="utf-8")

    if status is None and p["table"]:
        table = {(r.n, r.k): r.size for r in results}
        out.blank()
        out.row("check", "detail", "verdict")
        over = [(a, b) for (a, b), g in table.items() if b < a and g > 2 * comb(2 * a, b + 1)]
        out.check(not over)
        out.row("g<=2C(2n,k+1)", f"violations={len(over)}", "ok" if not over else "FAIL")
        bad = check_recurrence(table)
        out.check(not bad)
        out.row("recurrence", f"violations={len(bad)}", "ok" if not bad else "FAIL")
        if p["plot"]:
            from .plotting import plot_family_table

            plot_family_table(table, p["plot"])
            out.row("figure", p["plot"], "written")
    if status is not None:
        out.summary(status)
        return EXIT_LIMIT
    out.summary()
    return EXIT_OK if out.failures == 0 else EXIT_FAIL


# bounds ---------------------------------------------------------------------


def cmd_bounds(cfg: RunConfig, out: Output) -> int:
    p = cfg.params
    n, k = p["n"], p["k"]
    if n is None or k is None:
        raise InvalidParams("bounds needs --n and --k")
    out.row("kind", "n", "k", "bound")
    for kind in (BoundKind.THM1, BoundKind.THM2A, BoundKind.THM2B, BoundKind.THM2C, BoundKind.PROP24):
        try:
            b = edge_bound(kind, n, k)
        except InvalidParams:
            continue
        shown = f"6^{13 * n * (k + 1)}" if kind is BoundKind.THM1 else b
        out.row(kind.value, n, k if kind is not BoundKind.PROP24 else "", shown)

    if p["m"] is not None:
        out.blank()
        out.row("kind", "m", "n", "k", "scale", "exact", "digits")
        for kind in (BoundKind.CROSS_ALL, BoundKind.CROSS_INCIDENT, BoundKind.CROSS_PARALLEL):
            try:
                s = crossing_lb_scale(kind, p["m"], n, k)
            except InvalidParams:
                continue
            exact = s.exact is not None
            out.row(kind.value, p["m"], n, k, s, "true" if exact else "false", "" if exact else s.digits)

    if p["t_values"]:
        if k < 1:
            raise InvalidParams("the G(n,k,t) scan needs k >= 1")
        rows = crossing_ratio_scan(n, k, p["t_values"])
        out.blank()
        out.row("t", "edges", "crossings", "n*t^(2k+1)", "ratio", "identity")
        for t, total, ratio, m in rows:
            target = n * t ** (2 * k + 1)
            # n t^(2k+1) = m'^(2+1/k) / n^(1+1/k) at m' = n t^k
            ident = "n/a"
            if t**k >= 4:
                s = crossing_lb_scale(BoundKind.CROSS_ALL, n * t**k, n, k)
                ident = "ok" if out.check(s.exact == target) else "FAIL"
            out.row(t, m, total, target, _fmt_ratio(ratio), ident)
        ratios = [r[2] for r in rows]
        window = max(ratios) / min(ratios) if min(ratios) > 0 else None
        out.row("window", "", "", "", "" if window is None else _fmt_ratio(window), "")
        if p["plot"]:
            from .plotting import plot_crossing_ratios

            plot_crossing_ratios(rows, p["plot"], n, k)
            out.row("figure", p["plot"], "", "", "", "written")
    out.summary()
    return EXIT_OK if out.failures == 0 else EXIT_FAIL


# render ---------------------------------------------------------------------


def cmd_render(cfg: RunConfig, out: Output) -> int:
    d = hio.load(cfg.path)
    svg = render_svg(d, cfg.samples)
    if cfg.out:
        Path(cfg.out).write_text(svg, encoding="utf-8")
        out.summary("ok", paths=len(d.edges), vertices=d.n)
    else:
        out.stream.write(svg)
    return EXIT_OK


# entry point ----------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hforge", description="Non-homotopic multigraph drawings: build, check, search.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an extremal drawing and write it as JSON")
    c.add_argument("kind", choices=["gnk", "gnkt", "planar-tight", "spirals"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--w", type=int, help="largest winding number for spirals")
    c.add_argument("-o", "--out")

    v = sub.add_parser("verify", help="crossing, homotopy and bound checks for a drawing file")
    v.add_argument("path")
    v.add_argument("--k", type=int, help="crossing parameter to check against")

    e = sub.add_parser("encode", help="monotone drawing sequence of every edge")
    e.add_argument("path")
    e.add_argument("-o", "--out")

    m = sub.add_parser("maxfamily", help="exact g(n,k) by maximum clique search")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    m.add_argument("--table", action="store_true", help="all 1..n by 0..k cells")
    m.add_argument("--plot", help="figure path for the --table run")
    m.add_argument("-o", "--out", help="witness file")

    b = sub.add_parser("bounds", help="edge bounds, crossing scales and the G(n,k,t) ratio scan")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--m", type=int, help="edge count for the crossing scale rows")
    b.add_argument("--t", "--t-values", dest="t_values", type=_int_list, default=[])
    b.add_argument("--plot", help="figure path for the ratio scan")

    r = sub.add_parser("render", help="deterministic SVG of a drawing")
    r.add_argument("path")
    r.add_argument("-o", "--out")
    r.add_argument("--samples", type=int, default=64)
    return ap


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    skip = {"command", "path", "out", "budget", "samples"}
    params = {k: v for k, v in vars(ns).items() if k not in skip}
    cfg = RunConfig(
        ns.command, params, getattr(ns, "path", None), getattr(ns, "out", None),
        getattr(ns, "budget", DEFAULT_BUDGET), getattr(ns, "samples", 64),
    )
    if cfg.budget is not None and cfg.budget < 1:
        raise InvalidParams("--budget must be positive")
    if cfg.samples < 16:
        raise InvalidParams("--samples must be at least 16")
    return cfg


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "encode": cmd_encode,
    "maxfamily": cmd_maxfamily,
    "bounds": cmd_bounds,
    "render": cmd_render,
}


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    out = Output(sys.stdout)
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg, out)
    except (ParseError, InvalidParams, OSError) as exc:
        print(f"hforge: error: {exc}", file=sys.stderr)
        out.summary("usage-error")
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"hforge: {exc}", file=sys.stderr)
        out.summary("resource-limit")
        return EXIT_LIMIT
    except HForgeError as exc:
        print(f"hforge: {type(exc).__name__}: {exc}", file=sys.stderr)
        out.check(False)
        out.summary()
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
