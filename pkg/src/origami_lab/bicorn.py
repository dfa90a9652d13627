"""Bicorn curves between two curves and origami edge-paths built from them.

A bicorn is the union of an arc of ``a`` and an arc of ``b`` that meet only
at their two endpoint crossings.  Here a bicorn is described by two
crossings ``p`` and ``q`` of the minimal-position overlay of ``(a, b)``:
its a-arc runs from ``p`` to ``q`` in direction ``a_dir`` along ``a`` and
its b-arc returns from ``q`` to ``p`` in direction ``b_dir`` along ``b``.
It is realized by pushing both arcs slightly off ``a`` and ``b``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .curves import (
    CurveError,
    IntersectionData,
    Occupancy,
    PLCurve,
    arc_points,
    normalize,
    reduce_to_minimal,
    validate_curve,
)
from .pair import NotOrigamiPair, origami_from_pair, pair_status
from .surface import build, is_nonseparating

_OFFSETS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


class BicornError(CurveError):
    pass


@dataclass
class Bicorn:
    kind: str  # "a", "b" or "arc"
    curve: PLCurve
    p: int = -1
    q: int = -1
    a_dir: int = 0
    b_dir: int = 0

    def b_interval(self, data: IntersectionData):
        """Crossings on the b-arc (endpoints included), in the order walked."""
        if self.kind != "arc":
            return list(data.b_order) if self.kind == "b" else []
        return _walk(data.b_order, data.crossings[self.q].b_pos, data.crossings[self.p].b_pos, self.b_dir)

    def a_interval(self, data: IntersectionData):
        if self.kind != "arc":
            return list(data.a_order) if self.kind == "a" else []
        return _walk(data.a_order, data.crossings[self.p].a_pos, data.crossings[self.q].a_pos, self.a_dir)


def _walk(order, i, j, d):
    n = len(order)
    out = [order[i]]
    while i != j:
        i = (i + d) % n
        out.append(order[i])
    return out


def minimal_pair(a: PLCurve, b: PLCurve):
    a, b, data = reduce_to_minimal(a, b)
    return a, b, data


def is_bicorn_arc(data: IntersectionData, p: int, q: int, a_dir: int, b_dir: int) -> bool:
    """The a-arc and the b-arc share no crossing besides ``p`` and ``q``."""
    if p == q:
        return False
    xs = data.crossings
    a_in = set(_walk(data.a_order, xs[p].a_pos, xs[q].a_pos, a_dir)[1:-1])
    b_in = set(_walk(data.b_order, xs[q].b_pos, xs[p].b_pos, b_dir)[1:-1])
    return not (a_in & b_in)


def realize(data: IntersectionData, p: int, q: int, a_dir: int, b_dir: int) -> PLCurve:
    """Embedded push-off of the union of the a-arc and b-arc."""
    a, b = data.a, data.b
    X, Y = data.crossings[p], data.crossings[q]
    a_pts = arc_points(a, (X.a_chord, X.a_key), (Y.a_chord, Y.a_key), a_dir)
    b_pts = arc_points(b, (Y.b_chord, Y.b_key), (X.b_chord, X.b_key), b_dir)
    last = None
    for sa, sb in _OFFSETS:
        occ = Occupancy(a.origami, (a, b))
        pts = [occ.offset(pt, sa) for pt in a_pts] + [occ.offset(pt, sb) for pt in b_pts]
        if not pts:
            break
        try:
            c = normalize(PLCurve(a.origami, pts))
        except CurveError as e:
            last = str(e)
            continue
        problems = validate_curve(c)
        if not problems:
            return c
        last = "; ".join(problems)
    raise BicornError(f"no embedded realization for bicorn ({p}, {q}, {a_dir}, {b_dir}): {last}")


def make_bicorn(data, p, q, a_dir, b_dir) -> Bicorn:
    return Bicorn("arc", realize(data, p, q, a_dir, b_dir), p, q, a_dir, b_dir)


def enumerate_bicorns(a: PLCurve, b: PLCurve, data: IntersectionData | None = None):
    """All bicorns of a minimal-position pair, ``a`` and ``b`` first."""
    if data is None:
        a, b, data = minimal_pair(a, b)
    if not data.count:
        raise BicornError("curves are disjoint; there are no bicorns")
    out = [Bicorn("a", data.a), Bicorn("b", data.b)]
    for p, q in itertools.combinations(range(data.count), 2):
        for a_dir in (1, -1):
            for b_dir in (1, -1):
                if is_bicorn_arc(data, p, q, a_dir, b_dir):
                    out.append(make_bicorn(data, p, q, a_dir, b_dir))
    return out


def _single_coherent(x: PLCurve, y: PLCurve) -> bool:
    d = reduce_to_minimal(x, y)[2]
    return d.count == 1


def _coherent(x: PLCurve, y: PLCurve) -> bool:
    d = reduce_to_minimal(x, y)[2]
    return d.count == abs(d.algebraic)


def seed_bicorn(a: PLCurve, b: PLCurve, data: IntersectionData | None = None, log=None) -> Bicorn:
    """First bicorn: the b-arc between the first two crossings along ``b``.

    The a-arc follows ``a`` forward from the end of the b-arc back to its
    start; if that fails verification the other a-arc is tried.
    """
    if data is None:
        a, b, data = minimal_pair(a, b)
    if not data.count:
        raise BicornError("curves are disjoint")
    if data.count == 1:
        return Bicorn("b", data.b)
    x = data.b_order[0]
    y = data.b_order[1]
    for a_dir in (1, -1):
        if not is_bicorn_arc(data, y, x, a_dir, 1):
            continue
        bc = make_bicorn(data, y, x, a_dir, 1)
        ok = _single_coherent(data.a, bc.curve) and _coherent(data.a, bc.curve)
        if log is not None:
            log.append({"step": "seed", "a_dir": a_dir, "verified": ok})
        if ok:
            return bc
    raise BicornError("neither a-arc gives a seed meeting a exactly once")


def extend_bicorn(current: Bicorn, a: PLCurve, b: PLCurve, data: IntersectionData, log=None) -> Bicorn:
    """Extend the b-arc of ``current`` forward along ``b``.

    The b-arc grows to the first crossing ``z`` lying inside the current
    a-arc; the new a-arc joins ``z`` to the fixed start of the b-arc.  Both
    choices of a-arc are tried and the first meeting ``current`` exactly
    once and coherent with ``a`` and ``b`` is returned.  When no such
    crossing remains the result is ``b`` itself.
    """
    if current.kind == "b":
        raise BicornError("current bicorn is already b")
    xs = data.crossings
    n = data.count
    if current.kind == "a":
        raise BicornError("extension starts from a seed bicorn")
    start = current.q  # b-arc start, fixed along the path
    end = current.p
    a_inside = set(current.a_interval(data)[1:-1])
    pos = xs[end].b_pos
    z = None
    while True:
        pos = (pos + 1) % n
        cand = data.b_order[pos]
        if cand == start:
            break
        if cand in a_inside:
            z = cand
            break
    if z is None:
        return Bicorn("b", data.b)
    for a_dir in (current.a_dir, -current.a_dir):
        if not is_bicorn_arc(data, z, start, a_dir, 1):
            if log is not None:
                log.append({"step": "extend", "z": z, "a_dir": a_dir, "verified": False, "reason": "not a bicorn"})
            continue
        bc = make_bicorn(data, z, start, a_dir, 1)
        ok = (
            _single_coherent(current.curve, bc.curve)
            and _coherent(data.a, bc.curve)
            and _coherent(data.b, bc.curve)
        )
        if log is not None:
            log.append({"step": "extend", "z": z, "a_dir": a_dir, "verified": ok})
        if ok:
            return bc
    raise BicornError(f"no a-arc through crossing {z} meets the current bicorn once")


@dataclass
class EdgePath:
    curves: list
    bicorns: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    verified: bool = False
    log: list = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.curves) - 1


def origami_edge_path(a: PLCurve, b: PLCurve, verify: bool = True) -> EdgePath:
    """Bicorn path from ``a`` to ``b`` for an origami pair."""
    a_min, b_min, data = minimal_pair(a, b)
    _, reason = pair_status(a_min, b_min)
    if reason:
        raise NotOrigamiPair(reason)
    log = []
    cur = seed_bicorn(a_min, b_min, data, log)
    bicorns = [Bicorn("a", data.a), cur]
    while cur.kind != "b":
        cur = extend_bicorn(cur, a_min, b_min, data, log)
        bicorns.append(cur)
        if len(bicorns) > data.count + 2:
            raise BicornError("extension did not terminate")
    path = EdgePath([bc.curve for bc in bicorns], bicorns, log=log)
    if verify:
        verify_edge_path(path)
    return path


def intersection_matrix(curves):
    n = len(curves)
    geo = [[0] * n for _ in range(n)]
    alg = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = reduce_to_minimal(curves[i], curves[j])[2]
            geo[i][j] = geo[j][i] = d.count
            alg[i][j] = d.algebraic
            alg[j][i] = -d.algebraic
    return geo, alg


def verify_edge_path(path: EdgePath) -> dict:
    """Check the edge-path conditions and record the results on ``path``.

    (1) consecutive curves meet exactly once; (2) every pair is coherent;
    (3) every filling pair induces an origami; (4) every curve is
    non-separating.
    """
    cs = path.curves
    geo, alg = intersection_matrix(cs)
    report = {"consecutive": [], "coherent": [], "origami": [], "nonseparating": []}
    for i in range(len(cs) - 1):
        if geo[i][i + 1] != 1:
            report["consecutive"].append((i, i + 1, geo[i][i + 1]))
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if geo[i][j] != abs(alg[i][j]):
                report["coherent"].append((i, j, geo[i][j], alg[i][j]))
    origamis = []
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if geo[i][j] == 0 or geo[i][j] != abs(alg[i][j]):
                continue
            _, reason = pair_status(cs[i], cs[j])
            if reason == "pair is not filling":
                continue
            try:
                origamis.append((i, j, origami_from_pair(cs[i], cs[j])))
            except (NotOrigamiPair, AssertionError) as e:
                report["origami"].append((i, j, str(e)))
    sc = build(cs[0].origami) if cs else None
    for i, c in enumerate(cs):
        if not is_nonseparating(c, sc):
            report["nonseparating"].append(i)
    ok = not any(report.values())
    path.checks = {"geometric": geo, "algebraic": alg, "origamis": origamis, "report": report, "ok": ok}
    path.verified = ok
    return {"ok": ok, **report}
