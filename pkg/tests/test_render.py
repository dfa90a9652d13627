import xml.etree.ElementTree as ET

from origami_lab.bicorn import origami_edge_path
from origami_lab.io import load_origami
from origami_lab.origami import core_curves
from origami_lab.render import render_svg

from conftest import DATA

NS = "{http://www.w3.org/2000/svg}"


def count(svg, tag):
    return len(ET.fromstring(svg).findall(f".//{NS}{tag}"))


def test_torus_with_cores(torus):
    (a,), (b,) = core_curves(torus)
    svg = render_svg(torus, [a, b])
    assert count(svg, "rect") == 1
    assert count(svg, "polyline") == 2
    assert count(svg, "circle") == 1


def test_hempel_render(hempel_pair):
    # depends on the shipped Hempel fixture
    o = load_origami(DATA / "hempel.origami.json")
    a, b = hempel_pair
    svg = render_svg(o, [a, b])
    assert count(svg, "rect") == 21
    assert count(svg, "circle") == 21


def test_deterministic_and_path_render(four_square_cores):
    a, b = four_square_cores
    p = origami_edge_path(a, b)
    s1 = render_svg(a.origami, p.curves)
    s2 = render_svg(a.origami, p.curves)
    assert s1 == s2
    ET.fromstring(s1)
