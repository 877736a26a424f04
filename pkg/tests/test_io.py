import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hforge import io as hio
from hforge.construct import build_gnk, build_planar_tight, spiral_drawing
from hforge.drawing import MultigraphDrawing, make_edge
from hforge.errors import ParseError
from hforge.exact import Poly


@pytest.mark.parametrize("d", [build_gnk(6, 2), build_planar_tight(5), spiral_drawing(3)], ids=["gnk", "planar", "spiral"])
def test_round_trip_bit_exact(d, tmp_path):
    text = hio.dumps(d)
    back = hio.loads(text)
    assert back == d
    assert hio.dumps(back) == text
    path = tmp_path / "d.json"
    hio.dump(d, path)
    assert path.read_text(encoding="utf-8") == text
    assert hio.load(path) == d


def test_rationals_as_strings():
    xs = [Fraction(-1, 3), Fraction(5, 2)]
    e = make_edge(xs, 0, 1, Poly.from_roots(xs, Fraction(-7, 4)), "q")
    obj = json.loads(hio.dumps(MultigraphDrawing(xs, [e])))
    assert obj["vertices"] == ["-1/3", "5/2"]
    assert obj["edges"][0]["tail"] == 1 and obj["edges"][0]["head"] == 2
    assert all(isinstance(c, str) for c in obj["edges"][0]["coeffs"])


@settings(max_examples=80, deadline=None)
@given(st.lists(st.fractions(-20, 20, max_denominator=50), min_size=0, max_size=3))
def test_round_trip_random_curves(extra):
    xs = [Fraction(0), Fraction(1, 3), Fraction(2)]
    curve = Poly.from_roots([Fraction(0), Fraction(2)] + [r for r in extra if r != Fraction(1, 3)])
    d = MultigraphDrawing(xs, [make_edge(xs, 0, 2, curve, "e")])
    assert hio.loads(hio.dumps(d)) == d


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"vertices": ["1"]}',
        '{"vertices": "1", "edges": []}',
        '{"vertices": ["1", "2"], "edges": [{"tail": 1, "head": 3, "coeffs": ["0"]}]}',
        '{"vertices": ["1", "2"], "edges": [{"tail": 1, "head": 2, "coeffs": ["x"]}]}',
        '{"vertices": ["1", "2/0"], "edges": []}',
        '{"vertices": ["1", "2"], "edges": [{"tail": 1, "head": 2}]}',
        '{"vertices": ["1", "2"], "edges": [{"tail": true, "head": 2, "coeffs": ["2", "-3", "1"]}]}',
        '{"vertices": ["1", "2"], "edges": [{"kind": "spline", "tail": 1, "head": 2, "coeffs": []}]}',
        '{"vertices": ["1", "2"], "edges": [{"tail": 1, "head": 2, "coeffs": [1.5]}]}',
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        hio.loads(text)
