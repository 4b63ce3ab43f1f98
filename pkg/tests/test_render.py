import re

import pytest

from lattice import StepFunction, encode
from persistence import PersistenceDiagram
from render import StaircasePlot, save_png, save_svg, staircase_points


def svg_corners(text):
    d = re.search(r'<path class="staircase" d="([^"]+)"', text).group(1)
    return [tuple(float(v) for v in pair.split(",")) for pair in re.findall(r"[-\d.]+,[-\d.]+", d)]


def test_staircase_points_run_from_origin_to_corner():
    points = staircase_points(StepFunction((0.0, 0.25, 0.7)))
    assert points[0] == (0.0, 0.0)
    assert points[-1] == (1.0, 1.0)
    assert all(a[0] <= b[0] and a[1] <= b[1] for a, b in zip(points, points[1:]))


def test_svg_staircase_is_monotone():
    step = encode(PersistenceDiagram(dim=1, pairs=((1.0, 3.0), (2.0, 5.0), (4.0, 6.25))))
    plot = StaircasePlot()
    corners = svg_corners(plot.svg(step, title="q = 3"))
    assert corners[0] == pytest.approx(plot.to_pixels(0.0, 0.0), abs=1e-3)
    assert corners[-1] == pytest.approx(plot.to_pixels(1.0, 1.0), abs=1e-3)
    # pixel y grows downwards
    assert all(a[0] <= b[0] and a[1] >= b[1] for a, b in zip(corners, corners[1:]))


def test_svg_escapes_title():
    text = StaircasePlot().svg(StepFunction((0.0,)), title="a<b & c")
    assert "a&lt;b &amp; c" in text


def test_save_svg(tmp_path):
    path = tmp_path / "plot.svg"
    save_svg(StepFunction((0.0, 0.5)), path)
    assert path.read_text().startswith("<svg")


def test_save_png(tmp_path):
    pytest.importorskip("pygame")
    path = tmp_path / "out" / "plot.png"
    save_png(StepFunction((0.0, 0.5)), path, title="q = 2")
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert [p.name for p in path.parent.iterdir()] == ["plot.png"]
