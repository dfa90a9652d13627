import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from origami_lab.origami import (
    InvalidOrigami,
    Origami,
    canonical_form,
    check_origami,
    cylinders,
    enumerate_one_one,
    genus,
    is_isomorphic,
    is_one_one,
    num_vertices,
    perm_compose,
    perm_cycles,
    perm_from_cycles,
    perm_invert,
    perm_power,
    validate,
)


def brute_classes(n):
    """[1,1]-origami classes by trying every relabeling (independent oracle)."""
    cycles = [p for p in itertools.permutations(range(n)) if len(perm_cycles(p)) == 1]
    classes = set()
    for h in cycles:
        for v in cycles:
            key = min(
                (tuple(s[h[i]] for i in perm_invert(s)), tuple(s[v[i]] for i in perm_invert(s)))
                for s in itertools.permutations(range(n))
            )
            classes.add(key)
    return classes


def commutator_fixed_points(o):
    # vertices of angle 2*pi are fixed points of the commutator
    c = perm_compose(perm_compose(o.v_inv, o.h_inv), perm_compose(o.v, o.h))
    return perm_cycles(c)


def test_perm_helpers():
    p = (2, 0, 1)
    assert perm_compose(p, perm_invert(p)) == (0, 1, 2)
    assert perm_power(p, 3) == (0, 1, 2)
    assert perm_power(p, -1) == perm_invert(p)
    assert perm_from_cycles(perm_cycles(p), 3) == p


def test_validate_reports_problems():
    assert validate(Origami(2, (0, 0), (0, 1)))
    assert validate(Origami(2, (0, 1, 2), (0, 1)))
    assert "connected" in validate(Origami(2, (0, 1), (0, 1)))[0]
    with pytest.raises(InvalidOrigami):
        check_origami(Origami(2, (0, 1), (0, 1)))


def test_genus_small_cases(torus, l_shape, four_square):
    assert genus(torus) == 1
    assert genus(l_shape) == 2
    assert genus(four_square) == 2
    assert genus(Origami(2, (1, 0), (0, 1))) == 1


def test_vertex_count_matches_commutator_cycles(l_shape, four_square):
    for o in (l_shape, four_square, *enumerate_one_one(5)):
        assert num_vertices(o) == len(commutator_fixed_points(o))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_matches_brute_force(n):
    got = {(o.h, o.v) for o in enumerate_one_one(n)}
    assert len(got) == len(brute_classes(n))


def test_enumeration_counts_and_genera():
    assert [len(enumerate_one_one(n)) for n in range(1, 7)] == [1, 1, 2, 3, 8, 24]
    for o in enumerate_one_one(6):
        assert is_one_one(o)
    assert len(enumerate_one_one(5, g=3)) == 2
    assert len(enumerate_one_one(4, g=2)) == 1


def test_cylinders(l_shape):
    hor, ver = cylinders(l_shape)
    assert sorted(map(len, hor)) == [1, 2]
    assert sorted(map(len, ver)) == [1, 2]
    assert not is_one_one(l_shape)


origamis = st.sampled_from(enumerate_one_one(5) + enumerate_one_one(4))


@settings(max_examples=60, deadline=None)
@given(origamis, st.randoms(use_true_random=False))
def test_canonical_form_is_relabel_invariant(o, rnd):
    sigma = list(range(o.n))
    rnd.shuffle(sigma)
    r = o.relabel(tuple(sigma))
    assert canonical_form(r)[0] == canonical_form(o)[0]
    assert is_isomorphic(o, r)
    assert genus(r) == genus(o)


@settings(max_examples=30, deadline=None)
@given(origamis)
def test_canonical_form_returns_its_relabeling(o):
    c, sigma = canonical_form(o)
    assert o.relabel(sigma) == c
