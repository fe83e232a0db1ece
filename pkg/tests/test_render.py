import math
import re
import xml.etree.ElementTree as ET

import pytest

from deltoid import render

NS = "{http://www.w3.org/2000/svg}"


def classes(svg: str, cls: str) -> int:
    return len(re.findall(rf'class="{cls}"', svg))


def test_figure_spec_validation():
    with pytest.raises(ValueError):
        render.FigureSpec("nope")
    with pytest.raises(ValueError):
        render.FigureSpec("preimage", samples=8)
    with pytest.raises(ValueError):
        render.FigureSpec("crossings", width=0)
    with pytest.raises(ValueError):
        render.FigureSpec("crossings", n=0)


@pytest.mark.parametrize("fig", render.FIGURES)
def test_svg_is_valid_and_deterministic(fig):
    spec = render.FigureSpec(fig, n=8)
    a, b = render.render_svg(spec), render.render_svg(spec)
    assert a == b
    root = ET.fromstring(a.encode())
    assert root.tag == f"{NS}svg"
    assert root.get("viewBox") == "-4 -4 8 8"
    assert root.find(f"{NS}g").get("transform") == "scale(1,-1)"
    assert classes(a, "deltoid") == 1


def test_triangles_figure():
    svg = render.render_svg(render.FigureSpec("triangles"))
    for cls in ("triangle reference", "triangle reflected", "triangle large", "needle", "unit-circle"):
        assert classes(svg, cls) == 1
    assert classes(svg, "frame-line") == 2
    assert classes(svg, "frame-point") == 7
    assert "rendering defaults" in svg


def test_preimage_figure_n12():
    svg = render.render_svg(render.FigureSpec("preimage", n=12))
    assert classes(svg, "preimage-curve") == 6


def test_crossings_figure_n8():
    svg = render.render_svg(render.FigureSpec("crossings", n=8))
    assert classes(svg, "needle") == 24
    assert classes(svg, "crossing") == 64


def test_number_format():
    assert render._f(-0.0000001) == "0"
    assert render._f(1.5) == "1.5"
    assert render._f(math.pi) == "3.141593"
