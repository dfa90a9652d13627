"""Curves on the 4-square genus-2 origami shared by several test modules."""

from functools import lru_cache

from origami_lab.bicorn import origami_edge_path
from origami_lab.origami import Origami, core_curves
from origami_lab.twist import dehn_twist

FOUR = Origami(4, (1, 2, 3, 0), (1, 3, 0, 2))


@lru_cache(maxsize=None)
def four_square_curves():
    (h,), (v,) = core_curves(FOUR)
    path = origami_edge_path(h, v)
    return (h, v, *path.curves[1:-1], dehn_twist(h, v, 1), dehn_twist(v, h, -1))
