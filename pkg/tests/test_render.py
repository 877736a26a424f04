import pytest

from hforge.construct import build_gnk, build_planar_tight
from hforge.drawing import MultigraphDrawing, make_edge
from hforge.exact import Poly
from hforge.render import render_svg, write_svg


def test_gnk62_paths():
    svg = render_svg(build_gnk(6, 2))
    assert svg.count("<path ") == 35
    assert svg.count("<circle ") == 6
    assert svg.startswith("<?xml")


def test_two_vertex_drawing():
    d = MultigraphDrawing([0, 1], [make_edge([0, 1], 0, 1, Poly.from_roots([0, 1]), "e")])
    svg = render_svg(d, samples=16)
    assert svg.count("<path ") == 1 and svg.count("<circle ") == 2
    path = svg[svg.index("<path "):]
    assert path.split('d="M ')[1].split('"')[0].count(" L ") == 15


def test_polyline_drawing():
    d = build_planar_tight(4)
    svg = render_svg(d)
    assert svg.count("<path ") == 12
    assert "stroke-dasharray" not in svg


def test_byte_identical(tmp_path):
    d = build_gnk(5, 2)
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    write_svg(d, a)
    write_svg(d, b)
    assert a.read_bytes() == b.read_bytes()


def test_sample_floor():
    with pytest.raises(ValueError):
        render_svg(build_gnk(3, 1), samples=15)
