"""Dehn twists by curve surgery and the Thurston-type iteration.

Twisting ``g`` about ``c`` replaces each crossing of ``g`` with ``c`` by an
arc that turns onto ``c``, runs once around a thin annulus about ``c`` and
leaves on the far side.  Inside the annulus every such arc drifts across at
the same slope, so the arcs are pairwise disjoint and the result is
embedded.  ``direction=+1`` turns left at each crossing.
"""

from __future__ import annotations

import os
from bisect import bisect_left
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .curves import (
    LEFT,
    CurveError,
    Occupancy,
    PLCurve,
    across,
    check_curve,
    edge_of,
    general_position,
    is_filling,
    normalize,
    overlay,
    reduce_to_minimal,
)

DEFAULT_CHORD_BUDGET = 100_000
_THIRD = Fraction(1, 3)


class ChordBudgetExceeded(RuntimeError):
    pass


def chord_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("ORIGAMI_LAB_CHORD_BUDGET")
    return int(env) if env else DEFAULT_CHORD_BUDGET


def respace(curve: PLCurve, fixed=()) -> PLCurve:
    """Evenly respace the points of ``curve`` between points of ``fixed``.

    The order of all points on every edge is preserved, so this is an
    isotopy that keeps every crossing with the fixed curves; it keeps the
    denominators small during long twist iterations.
    """
    o = curve.origami
    anchors = defaultdict(list)
    for f in fixed:
        for e, t in f.edge_points():
            anchors[e].append(t)
    mine = defaultdict(list)
    keys = curve.edge_points()
    for i, (e, t) in enumerate(keys):
        mine[e].append((t, i))
    new_t = {}
    for e, pts in mine.items():
        cuts = sorted(set(anchors.get(e, ())))
        bounds = [Fraction(0)] + cuts + [Fraction(1)]
        groups = defaultdict(list)
        for t, i in sorted(pts):
            groups[bisect_left(cuts, t)].append(i)
        for slot, idx in groups.items():
            lo, hi = bounds[slot], bounds[slot + 1]
            k = len(idx)
            for r, i in enumerate(idx):
                new_t[i] = lo + (hi - lo) * (r + 1) / (k + 1)
    pts = [(s, side, new_t[i]) for i, (s, side, _) in enumerate(curve.points)]
    return PLCurve(o, pts)


def dehn_twist(g: PLCurve, c: PLCurve, direction: int = 1, budget: int | None = None) -> PLCurve:
    """Image of ``g`` under the Dehn twist about ``c`` (left twist for +1)."""
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    if g.origami != c.origami:
        raise CurveError("curves live on different origamis")
    check_curve(c)
    budget = chord_budget(budget)
    c, g = general_position(c, g)
    data = overlay(g, c)
    if data.count and not data.sign_uniform():
        g, c, data = reduce_to_minimal(g, c)
    if not data.count:
        return g
    o = g.origami
    E = c.points
    M = len(E)
    if len(g.points) + data.count * M > budget:
        raise ChordBudgetExceeded(
            f"twist would produce {len(g.points) + data.count * M} chords (budget {budget})"
        )
    # annulus half-widths at each point of c
    occ = Occupancy(o, (g, c))
    width = []
    for s, side, t in E:
        lo, hi = occ.neighbours(edge_of(o, s, side), t)
        width.append(min(t - lo, hi - t) / 2)
    # position of each crossing along c, never a multiple of 1/2 off an edge point
    on_chord = defaultdict(list)
    for x in data.crossings:
        on_chord[x.b_chord].append(x)
    theta = {}
    for j, xs in on_chord.items():
        xs.sort(key=lambda x: x.b_key)
        R = len(xs)
        for r, x in enumerate(xs):
            theta[x.index] = (j - 1) + (r + _THIRD) / (R + 1)

    def spiral(x):
        s = x.sign
        d = s * direction
        th = theta[x.index]
        j = x.b_chord
        out = []
        for step in range(M):
            p = (j + step) % M if d > 0 else (j - 1 - step) % M
            dist = (p - th) % M if d > 0 else (th - p) % M
            u = s * (1 - 2 * dist / M)
            cs, cside, ct = E[p]
            nt = ct + LEFT[cside] * u * width[p]
            pt = (cs, cside, nt)
            out.append(pt if d > 0 else across(o, pt))
        return out

    on_g = defaultdict(list)
    for x in data.crossings:
        on_g[x.a_chord].append(x)
    pts = []
    for k, gp in enumerate(g.points):
        for x in sorted(on_g.get(k, ()), key=lambda x: x.a_key):
            pts.extend(spiral(x))
        pts.append(gp)
    return normalize(PLCurve(o, pts))


@dataclass(frozen=True)
class TwistWord:
    """Product of Dehn twists, applied right to left.

    ``factors`` is a sequence of ``(curve, exponent)``.
    """

    factors: tuple

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple((c, -e) for c, e in reversed(self.factors)))


def thurston_word(a: PLCurve, g: PLCurve) -> TwistWord:
    """``T_a o T_g^{-1}``."""
    return TwistWord(((a, 1), (g, -1)))


def apply_word(w: TwistWord, g: PLCurve, budget: int | None = None, fixed=()) -> PLCurve:
    cur = g
    for c, e in reversed(w.factors):
        for _ in range(abs(e)):
            cur = dehn_twist(cur, c, 1 if e > 0 else -1, budget)
            if fixed:
                cur = respace(cur, fixed)
    return cur


@dataclass
class IterationRecord:
    n: int
    curve: PLCurve
    i_a: int
    i_g: int
    coherent_a: bool
    coherent_g: bool
    filling: bool
    chords: int

    @property
    def distance_lower(self) -> int:
        return 3 if self.filling else (2 if self.i_a else 1)

    def as_dict(self):
        return {
            "n": self.n,
            "i_a": self.i_a,
            "i_g": self.i_g,
            "coherent_a": self.coherent_a,
            "coherent_g": self.coherent_g,
            "filling": self.filling,
            "distance_lower": self.distance_lower,
            "chords": self.chords,
        }


def _minimal_data(x: PLCurve, y: PLCurve):
    return reduce_to_minimal(x, y)[2]


def iterate_pa(a: PLCurve, g: PLCurve, N: int, budget: int | None = None, with_zero: bool = False):
    """Records for ``h^n(g)``, ``n = 1..N`` with ``h = T_a o T_g^{-1}``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    da = _minimal_data(a, g)
    if not da.count or da.count != abs(da.algebraic) or not is_filling(a, g):
        raise CurveError("(a, g) must be a coherent filling pair")
    w = thurston_word(a, g)
    records = []

    def record(n, cur):
        xa = _minimal_data(cur, a)
        xg = _minimal_data(cur, g)
        fill = bool(xa.count) and is_filling(cur, a)
        return IterationRecord(
            n, cur, xa.count, xg.count,
            xa.count == abs(xa.algebraic), xg.count == abs(xg.algebraic),
            fill, len(cur.points),
        )

    cur = g
    if with_zero:
        records.append(record(0, cur))
    for n in range(1, N + 1):
        cur = apply_word(w, cur, budget, fixed=(a, g))
        records.append(record(n, cur))
    return records
