from fractions import Fraction
from pathlib import Path

import pytest

from origami_lab.curves import PLCurve
from origami_lab.io import load_curvepair, load_origami
from origami_lab.origami import Origami, core_curves, enumerate_one_one

DATA = Path(__file__).resolve().parent.parent / "src" / "origami_lab" / "data"


def cores(o):
    (a,), (b,) = core_curves(o)
    return a, b


@pytest.fixture
def torus():
    return Origami(1, (0,), (0,))


@pytest.fixture
def l_shape():
    return load_origami(DATA / "l-shape.origami.json")


@pytest.fixture
def four_square():
    """Smallest genus-2 [1,1] origami: h = (0 1 2 3), v = (0 1 3 2)."""
    o = enumerate_one_one(4, 2)[0]
    assert o == Origami(4, (1, 2, 3, 0), (1, 3, 0, 2))
    return o


@pytest.fixture
def four_square_cores(four_square):
    return cores(four_square)


@pytest.fixture
def hempel_pair():
    """Shipped Hempel fixture; tests using it depend on that data file."""
    return load_curvepair(DATA / "hempel.curvepair.json")


@pytest.fixture
def bigon_pair():
    """Horizontal core of the 2-square torus and a copy of it pushed across
    itself, forming two crossings that bound bigons."""
    o = Origami(2, (1, 0), (0, 1))
    a = PLCurve(o, [(0, "R", Fraction(1, 2)), (1, "R", Fraction(1, 2))])
    b = PLCurve(o, [(0, "R", Fraction(3, 4)), (1, "R", Fraction(1, 4))])
    return a, b


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
