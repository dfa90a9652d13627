import pytest

from origami_lab.bicorn import origami_edge_path
from origami_lab.origami import Origami, canonical_form, core_curves, enumerate_one_one, genus
from origami_lab.pair import NotOrigamiPair, origami_from_pair, pair_status, subpair_origamis


@pytest.mark.parametrize("o", [o for n in range(1, 7) for o in enumerate_one_one(n)], ids=str)
def test_roundtrip(o):
    (a,), (b,) = core_curves(o)
    assert canonical_form(origami_from_pair(a, b))[0] == canonical_form(o)[0]


def test_reversed_curve_flips_sign_but_not_origami(four_square):
    (a,), (b,) = core_curves(four_square)
    o1 = origami_from_pair(a, b)
    o2 = origami_from_pair(a, b.reversed())
    assert canonical_form(o1)[0] == canonical_form(o2)[0]
    o3 = origami_from_pair(b, a)
    assert o3.n == 4 and genus(o3) == 2


def test_rejections(l_shape, bigon_pair):
    (h0, h1), (v0, v1) = core_curves(l_shape)
    assert pair_status(h0, h1)[1] == "curves are disjoint"
    with pytest.raises(NotOrigamiPair):
        origami_from_pair(h0, h1)
    assert pair_status(h0, v0)[1] == "pair is not filling"
    a, b = bigon_pair
    assert pair_status(a, b)[1] == "curves are disjoint"


def test_hempel_pair_gives_genus_two_origami(hempel_pair):
    # depends on the shipped Hempel fixture
    a, b = hempel_pair
    o = origami_from_pair(a, b)
    assert o.n == 21 and genus(o) == 2


def test_subpairs_need_verified_path(four_square):
    (a,), (b,) = core_curves(four_square)
    p = origami_edge_path(a, b, verify=False)
    with pytest.raises(NotOrigamiPair):
        subpair_origamis(p)
    p = origami_edge_path(a, b)
    found, skipped = subpair_origamis(p)
    assert (0, p.length) in {(i, j) for i, j, _ in found}
    assert all(r in ("pair is not filling", "curves are disjoint") for _, _, r in skipped)
