"""Drawing interchange files (UTF-8 JSON, rationals as ``"p/q"`` strings).

Two layouts share one loader. Monotone drawings list vertex x-coordinates and
polynomial edges::

    {"vertices": ["1", "2"], "edges": [{"tail": 1, "head": 2,
      "coeffs": ["2", "-3", "1"], "label": "e1,2"}]}

General drawings list vertex points and polyline edges (loops allowed)::

    {"vertices": [["0", "0"], ...], "edges": [{"kind": "polyline",
      "tail": 1, "head": 1, "points": [["0", "0"], ...], "label": "loop"}]}

Indices are 1-based in files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .drawing import MultigraphDrawing, make_edge
from .errors import ParseError
from .exact import Poly, format_rational, rational
from .planar import GeneralDrawing, PolylineEdge

AnyDrawing = Union[MultigraphDrawing, GeneralDrawing]


def _pt(p):
    return [format_rational(p[0]), format_rational(p[1])]


def to_json(d: AnyDrawing) -> dict:
    if isinstance(d, MultigraphDrawing):
        return {
            "vertices": [format_rational(x) for x in d.vertices],
            "edges": [
                {
                    "tail": e.tail + 1,
                    "head": e.head + 1,
                    "coeffs": [format_rational(c) for c in e.curve.coeffs],
                    "label": e.label,
                }
                for e in d.edges
            ],
        }
    return {
        "vertices": [_pt(v) for v in d.vertices],
        "edges": [
            {
                "kind": "polyline",
                "tail": e.tail + 1,
                "head": e.head + 1,
                "points": [_pt(p) for p in e.points],
                "label": e.label,
            }
            for e in d.edges
        ],
    }


def dumps(d: AnyDrawing) -> str:
    return json.dumps(to_json(d), indent=1) + "\n"


def _index(rec, key, n):
    v = rec.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
        raise ParseError(f"edge field {key!r} must be an index in 1..{n}")
    return v - 1


def from_json(obj) -> AnyDrawing:
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise ParseError("expected an object with 'vertices' and 'edges'")
    verts, edges = obj["vertices"], obj["edges"]
    if not isinstance(verts, list) or not isinstance(edges, list):
        raise ParseError("'vertices' and 'edges' must be lists")
    general = any(isinstance(v, list) for v in verts) or any(
        isinstance(e, dict) and e.get("kind") == "polyline" for e in edges
    )
    n = len(verts)
    try:
        if general:
            pts = [(rational(v[0]), rational(v[1])) for v in verts]
            out = []
            for rec in edges:
                if rec.get("kind", "polyline") != "polyline":
                    raise ParseError("general drawings take polyline edges only")
                points = [(rational(p[0]), rational(p[1])) for p in rec["points"]]
                out.append(
                    PolylineEdge(_index(rec, "tail", n), _index(rec, "head", n), points, str(rec.get("label", "")))
                )
            return GeneralDrawing(pts, out)
        xs = [rational(v) for v in verts]
        out = []
        for rec in edges:
            if rec.get("kind", "polynomial") != "polynomial":
                raise ParseError(f"unknown edge kind {rec.get('kind')!r}")
            curve = Poly(rational(c) for c in rec["coeffs"])
            out.append(make_edge(xs, _index(rec, "tail", n), _index(rec, "head", n), curve, str(rec.get("label", ""))))
        return MultigraphDrawing(xs, out)
    except (KeyError, IndexError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed drawing record: {exc}") from exc


def loads(text: str) -> AnyDrawing:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from exc
    return from_json(obj)


def load(path) -> AnyDrawing:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(d: AnyDrawing, path) -> None:
    Path(path).write_text(dumps(d), encoding="utf-8")
