from fractions import Fraction

import pytest

from origami_lab.bicorn import EdgePath, origami_edge_path, seed_bicorn
from origami_lab.curves import CurveError, geometric_intersection
from origami_lab.explorer import (
    UNIVERSE,
    distance_bounds,
    greedy_candidates,
    greedy_next,
    greedy_path,
    growth_experiment,
    quotient_report,
)
from origami_lab.origami import core_curves, enumerate_one_one


def cores(o):
    (a,), (b,) = core_curves(o)
    return a, b


def test_quotients_on_length_two_path():
    p = next(
        p for p in (origami_edge_path(*cores(o)) for o in enumerate_one_one(3)) if p.length == 2
    )
    assert quotient_report(p).quotients == [Fraction(1)]


@pytest.mark.parametrize("o", [o for n in range(2, 7) for o in enumerate_one_one(n)], ids=str)
def test_bicorn_path_quotients_decrease(o):
    q = quotient_report(origami_edge_path(*cores(o)))
    assert q.strictly_decreasing
    assert all(isinstance(x, Fraction) for x in q.quotients)


def test_quotients_need_verified_path(four_square_cores):
    with pytest.raises(CurveError):
        quotient_report(EdgePath(list(four_square_cores)))


def test_hempel_quotients(hempel_pair):
    # depends on the shipped Hempel fixture
    q = quotient_report(origami_edge_path(*hempel_pair))
    assert q.pairs == [(4, 1), (2, 8), (1, 19)]
    assert q.quotients == [Fraction(4, 1), Fraction(2, 8), Fraction(1, 19)]
    assert q.strictly_decreasing


def test_greedy_next_returns_b_when_adjacent(four_square_cores):
    a, b = four_square_cores
    # from a curve meeting b once, b itself wins with i(b, b) = 0
    p = origami_edge_path(a, b)
    last = p.curves[-2]
    assert geometric_intersection(greedy_next(last, a, b), b) == 0


def test_greedy_next_minimizes_over_universe(four_square_cores):
    a, b = four_square_cores
    x = greedy_next(a, a, b)
    cands = greedy_candidates(a, a, b)
    assert cands
    assert geometric_intersection(b, x) == min(c[2] for c in cands)
    assert geometric_intersection(b, x) <= geometric_intersection(b, seed_bicorn(a, b).curve)


def test_greedy_path_four_square(four_square_cores):
    rep = greedy_path(*four_square_cores)
    assert rep.best_path.verified
    assert rep.origami_length_upper == min(rep.greedy_length, rep.bicorn_length)
    assert rep.universe == UNIVERSE


def test_greedy_degenerate(four_square_cores):
    a, _ = four_square_cores
    rep = greedy_path(a, a)
    assert rep.origami_length_upper == 0


def test_greedy_on_hempel(hempel_pair):
    # depends on the shipped Hempel fixture
    rep = greedy_path(*hempel_pair)
    assert rep.bicorn_length == 4
    assert rep.origami_length_upper <= 4
    assert rep.best_path.verified


def test_distance_bounds(four_square_cores, l_shape, hempel_pair):
    a, b = four_square_cores
    db = distance_bounds(a, b, origami_edge_path(a, b))
    assert db.lower == 3 and db.reason == "filling"
    assert db.lower <= db.upper_rasmussen <= db.upper_ns
    assert not db.upper_ns_certified
    (h0, h1), (v0, _) = core_curves(l_shape)
    assert distance_bounds(h0, h1).lower == 1
    assert distance_bounds(h0, v0).lower == 2
    assert distance_bounds(h0, h0).lower == 0
    # depends on the shipped Hempel fixture
    a, b = hempel_pair
    db = distance_bounds(a, b, origami_edge_path(a, b))
    assert (db.lower, db.upper_rasmussen, db.upper_ns) == (3, 4, 8)


def test_growth(four_square_cores):
    a, g = four_square_cores
    res = growth_experiment(a, g, 2)
    rows = res["rows"]
    assert rows[0]["n"] == 0 and rows[0]["i_g"] == 0 and rows[0]["i_a"] == 4
    assert [r["i_a"] for r in rows] == [4, 4, 68]
    assert all(r["coherent_a"] and r["coherent_g"] for r in rows)
    assert res["i_a_strictly_increasing"]
