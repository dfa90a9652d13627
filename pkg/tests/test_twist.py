import pytest

from curve_fixtures import four_square_curves
from origami_lab.curves import CurveError, algebraic_intersection, geometric_intersection
from origami_lab.origami import core_curves
from origami_lab.twist import (
    ChordBudgetExceeded,
    TwistWord,
    apply_word,
    chord_budget,
    dehn_twist,
    iterate_pa,
    respace,
    thurston_word,
)

CURVES = four_square_curves()


def test_torus_twist_gives_slope_one(torus):
    (a,), (b,) = core_curves(torus)
    t = dehn_twist(a, b, 1)
    assert geometric_intersection(t, a) == 1
    assert geometric_intersection(t, b) == 1
    assert algebraic_intersection(t, b) == algebraic_intersection(a, b)


def test_twist_about_disjoint_curve_is_identity(l_shape):
    (h0, h1), _ = core_curves(l_shape)
    assert dehn_twist(h0, h1) == h0


@pytest.mark.parametrize(
    "pair",
    [(0, 1), (1, 0), (2, 0), (3, 1), (4, 1), (5, 0)],
)
def test_twist_squares_intersection(pair):
    c, a = (CURVES[k] for k in pair)
    n = geometric_intersection(c, a)
    for d in (1, -1):
        assert geometric_intersection(dehn_twist(a, c, d), a) == n * n


def test_twist_squares_intersection_on_hempel_fixture(hempel_pair):
    a, b = hempel_pair
    assert geometric_intersection(dehn_twist(a, b), a) == 21 * 21


@pytest.mark.parametrize("ci,ai", [(0, 1), (1, 2), (4, 0)])
def test_inverse_twist_undoes_twist(ci, ai):
    c, a = CURVES[ci], CURVES[ai]
    back = dehn_twist(dehn_twist(a, c, 1), c, -1)
    for x in CURVES:
        assert geometric_intersection(back, x) == geometric_intersection(a, x)
        assert algebraic_intersection(back, x) == algebraic_intersection(a, x)


@pytest.mark.parametrize("ci,ai,bi", [(0, 1, 2), (1, 0, 3), (2, 0, 1), (0, 3, 4)])
def test_flp_band(ci, ai, bi):
    c, a, b = CURVES[ci], CURVES[ai], CURVES[bi]
    ica, icb, iab = (geometric_intersection(*p) for p in ((c, a), (c, b), (a, b)))
    cur = a
    for n in range(1, 4):
        cur = respace(dehn_twist(cur, c, 1), (b, c))
        assert abs(geometric_intersection(cur, b) - n * ica * icb) <= iab


def test_respace_is_an_isotopy():
    a, b = CURVES[4], CURVES[1]
    r = respace(a, (b,))
    assert geometric_intersection(r, b) == geometric_intersection(a, b)
    assert max(t.denominator for _, _, t in r.points) <= max(t.denominator for _, _, t in a.points) * 64


def test_word_and_inverse():
    a, g = CURVES[0], CURVES[1]
    w = thurston_word(a, g)
    x = apply_word(w, g)
    back = apply_word(w.inverse(), x)
    assert geometric_intersection(back, a) == geometric_intersection(g, a)
    assert TwistWord(((a, 2),)).inverse().factors == ((a, -2),)


def test_budget(monkeypatch):
    a, g = CURVES[0], CURVES[1]
    with pytest.raises(ChordBudgetExceeded):
        dehn_twist(g, a, 1, budget=10)
    monkeypatch.setenv("ORIGAMI_LAB_CHORD_BUDGET", "7")
    assert chord_budget() == 7
    with pytest.raises(ChordBudgetExceeded):
        dehn_twist(g, a, 1)
    assert chord_budget(99) == 99


def test_bad_direction():
    with pytest.raises(ValueError):
        dehn_twist(CURVES[0], CURVES[1], 2)


def test_iterate_matches_trace_recurrence():
    a, g = CURVES[0], CURVES[1]
    recs = iterate_pa(a, g, 3)
    # the action on the (a, g) plane has trace 18, so i_n = 18 i_{n-1} - i_{n-2}
    # starting from i_0 = i(a, g) = 4 and i_1 = 4
    expect = [4, 4]
    while len(expect) < 4:
        expect.append(18 * expect[-1] - expect[-2])
    assert [r.i_a for r in recs] == expect[1:] == [4, 68, 1220]
    for r in recs:
        assert r.coherent_a and r.coherent_g and r.filling
        assert r.distance_lower == 3


def test_iterate_needs_coherent_filling_pair(l_shape):
    (h0, h1), _ = core_curves(l_shape)
    with pytest.raises(CurveError):
        iterate_pa(h0, h1, 1)
    with pytest.raises(ValueError):
        iterate_pa(CURVES[0], CURVES[1], 0)
