import pytest

from curve_fixtures import four_square_curves
from origami_lab.curves import algebraic_intersection
from origami_lab.origami import Origami, core_curves, enumerate_one_one, genus
from origami_lab.surface import build, cycle_boundary, homology_vector, is_nonseparating, pairing_with_cycle

FIXTURES = [Origami(1, (0,), (0,)), Origami(3, (1, 0, 2), (2, 1, 0))] + enumerate_one_one(5)


@pytest.mark.parametrize("o", FIXTURES, ids=str)
def test_euler_characteristic_and_cycle_count(o):
    sc = build(o)
    assert sc.V - sc.E + sc.F == 2 - 2 * genus(o)
    assert sc.E == 2 * o.n
    # a spanning tree has V - 1 edges; every other edge closes one cycle
    assert len(sc.fundamental_cycles) == sc.E - sc.V + 1
    for z in sc.fundamental_cycles:
        assert cycle_boundary(sc, z) == {}


@pytest.mark.parametrize("o", FIXTURES, ids=str)
def test_square_boundaries_pair_to_zero(o):
    sc = build(o)
    hor, ver = core_curves(o)
    for s in range(o.n):
        # bottom + right - top - left of square s is a boundary
        z = [(("H", s), 1), (("V", o.h[s]), 1), (("H", o.v[s]), -1), (("V", s), -1)]
        assert cycle_boundary(sc, z) == {}
        for c in hor + ver:
            assert pairing_with_cycle(c, z, sc) == 0


def test_pairing_counts_signed_crossings(torus):
    sc = build(torus)
    (a,), (b,) = core_curves(torus)
    # a crosses the left edge of the square once, b the bottom edge once
    assert pairing_with_cycle(a, [(("V", 0), 1)]) == -pairing_with_cycle(a.reversed(), [(("V", 0), 1)])
    assert abs(pairing_with_cycle(a, [(("V", 0), 1)])) == 1
    assert pairing_with_cycle(a, [(("H", 0), 1)]) == 0
    assert abs(pairing_with_cycle(b, [(("H", 0), 1)])) == 1
    assert is_nonseparating(a, sc) and is_nonseparating(b, sc)


def test_homology_vector_is_linear_under_twists():
    # algebraic intersection with any curve only depends on homology
    cs = four_square_curves()
    sc = build(cs[0].origami)
    for x in cs:
        for y in cs:
            if homology_vector(x, sc) == homology_vector(y, sc):
                for z in cs:
                    assert algebraic_intersection(x, z) == algebraic_intersection(y, z)


def test_all_fixture_curves_nonseparating():
    cs = four_square_curves()
    sc = build(cs[0].origami)
    assert all(is_nonseparating(c, sc) for c in cs)
