"""Piecewise-linear simple closed curves on an origami and their intersections.

A curve is stored as the cyclic sequence of points where it leaves a square:
``(square, side, t)`` means the curve exits ``square`` through ``side`` at
parameter ``t`` (the y-coordinate on L/R sides, the x-coordinate on T/B
sides).  Between two consecutive exits the curve is a straight chord inside
the square of the second exit.  All coordinates are exact ``Fraction``s.

Inside a (convex) square two chords cross iff their endpoints interleave on
the boundary, so everything below is decided from the cyclic order of
boundary points.  Boundary points are located by their counterclockwise
perimeter coordinate in ``[0, 4)`` starting at the bottom-left corner.
"""

from __future__ import annotations

import bisect
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .origami import Origami, corner_classes

HALF = Fraction(1, 2)
SIDES = ("L", "R", "T", "B")
# +1 when moving in the direction of increasing t is to the left of travel
# for a curve leaving a square through that side; equals the sign of the
# crossing with the edge oriented rightward (H) / upward (V).
LEFT = {"R": 1, "B": 1, "T": -1, "L": -1}
FOUR = Fraction(4)


class CurveError(ValueError):
    pass


class NullHomotopic(CurveError):
    pass


def as_fraction(t) -> Fraction:
    if isinstance(t, Fraction):
        return t
    if isinstance(t, str):
        return Fraction(t)
    if isinstance(t, int):
        return Fraction(t)
    raise TypeError(f"exact rational expected, got {t!r}")


def across(o: Origami, p):
    """The same edge point seen from the square on the other side."""
    s, side, t = p
    if side == "R":
        return (o.h[s], "L", t)
    if side == "L":
        return (o.h_inv[s], "R", t)
    if side == "T":
        return (o.v[s], "B", t)
    return (o.v_inv[s], "T", t)


def edge_of(o: Origami, s: int, side: str):
    """Geometric edge ``('V', k)`` (left side of square k) or ``('H', k)``."""
    if side == "L":
        return ("V", s)
    if side == "R":
        return ("V", o.h[s])
    if side == "B":
        return ("H", s)
    return ("H", o.v[s])


def perimeter(side: str, t: Fraction) -> Fraction:
    if side == "B":
        return t
    if side == "R":
        return 1 + t
    if side == "T":
        return 3 - t
    return 4 - t


def coords(side: str, t: Fraction):
    if side == "B":
        return (t, Fraction(0))
    if side == "R":
        return (Fraction(1), t)
    if side == "T":
        return (t, Fraction(1))
    return (Fraction(0), t)


def _ccw(x, y):
    """Counterclockwise perimeter distance from x to y."""
    d = y - x
    return d + 4 if d < 0 else d


def _in_arc(p, q, x):
    """Is x strictly inside the counterclockwise boundary arc from p to q?"""
    return 0 < _ccw(p, x) < _ccw(p, q)


@dataclass(frozen=True)
class Chord:
    index: int
    square: int
    entry: tuple  # (side, t)
    exit: tuple
    p: Fraction  # perimeter coordinate of entry
    q: Fraction  # perimeter coordinate of exit


class PLCurve:
    """An oriented closed curve given by its exits from squares."""

    __slots__ = ("origami", "points", "_chords")

    def __init__(self, origami: Origami, points):
        self.origami = origami
        self.points = tuple((int(s), str(side), as_fraction(t)) for s, side, t in points)
        self._chords = None

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        return (
            isinstance(other, PLCurve)
            and self.origami == other.origami
            and self.points == other.points
        )

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PLCurve({len(self.points)} chords)"

    def chords(self) -> list[Chord]:
        if self._chords is None:
            o = self.origami
            out = []
            m = len(self.points)
            for k in range(m):
                es, eside, et = across(o, self.points[k - 1])
                s, side, t = self.points[k]
                if es != s:
                    raise CurveError(f"chord {k}: entry square {es} differs from exit square {s}")
                out.append(Chord(k, s, (eside, et), (side, t), perimeter(eside, et), perimeter(side, t)))
            self._chords = out
        return self._chords

    def reversed(self) -> "PLCurve":
        o = self.origami
        m = len(self.points)
        pts = [across(o, self.points[(k - 1) % m]) for k in range(m - 1, -1, -1)]
        return PLCurve(o, pts)

    def edge_points(self):
        """Canonical ``(edge, t)`` keys of the points, in curve order."""
        o = self.origami
        return [(edge_of(o, s, side), t) for s, side, t in self.points]

    def rotated(self, k: int) -> "PLCurve":
        return PLCurve(self.origami, self.points[k:] + self.points[:k])


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _nested(chords) -> bool:
    """Are the chords (p, q) pairwise non-crossing with distinct endpoints?"""
    ends = []
    for i, (p, q) in enumerate(chords):
        ends.append((p, i))
        ends.append((q, i))
    ends.sort()
    for j in range(1, len(ends)):
        if ends[j][0] == ends[j - 1][0]:
            return False
    stack = []
    for _, i in ends:
        if stack and stack[-1] == i:
            stack.pop()
        else:
            stack.append(i)
    return not stack


def validate_curve(c: PLCurve, o: Origami | None = None) -> list[str]:
    """Violated curve invariants; empty when ``c`` is an embedded curve on ``o``."""
    o = o or c.origami
    if c.origami != o:
        return ["curve lives on a different origami"]
    problems = []
    if len(c.points) < 1:
        return ["curve has no edge points"]
    for k, (s, side, t) in enumerate(c.points):
        if not 0 <= s < o.n:
            problems.append(f"point {k}: square {s} out of range")
        if side not in SIDES:
            problems.append(f"point {k}: bad side {side!r}")
        if not 0 < t < 1:
            problems.append(f"point {k}: t={t} outside (0, 1)")
    if problems:
        return problems
    try:
        chords = c.chords()
    except CurveError as e:
        return [str(e)]
    keys = c.edge_points()
    if len(set(keys)) != len(keys):
        problems.append("curve passes twice through the same edge point")
    per_square = defaultdict(list)
    for ch in chords:
        if ch.entry[0] == ch.exit[0]:
            problems.append(f"chord {ch.index} joins side {ch.exit[0]} of square {ch.square} to itself")
        per_square[ch.square].append((ch.p, ch.q))
    for s, lst in per_square.items():
        if not _nested(lst):
            problems.append(f"chords in square {s} cross or share endpoints (not embedded)")
    return problems


def check_curve(c: PLCurve, o: Origami | None = None):
    problems = validate_curve(c, o)
    if problems:
        raise CurveError("; ".join(problems))


# ---------------------------------------------------------------------------
# edge occupancy and offsets
# ---------------------------------------------------------------------------

class Occupancy:
    """Sorted parameters of all points on each geometric edge."""

    def __init__(self, o: Origami, curves=()):
        self.o = o
        self.edges = defaultdict(list)
        for c in curves:
            for e, t in c.edge_points():
                self.edges[e].append(t)
        for lst in self.edges.values():
            lst.sort()

    def add(self, e, t):
        bisect.insort(self.edges[e], t)

    def neighbours(self, e, t):
        lst = self.edges.get(e, [])
        i = bisect.bisect_left(lst, t)
        j = bisect.bisect_right(lst, t)
        lo = lst[i - 1] if i > 0 else Fraction(0)
        hi = lst[j] if j < len(lst) else Fraction(1)
        return lo, hi

    def offset(self, point, direction: int):
        """Move an exit point by half the smallest gap to its neighbours.

        ``direction`` is +1 (left of travel) or -1 (right of travel).  The new
        point is recorded so later offsets on the same edge avoid it.
        """
        s, side, t = point
        e = edge_of(self.o, s, side)
        lo, hi = self.neighbours(e, t)
        delta = min(t - lo, hi - t) / 2
        nt = t + LEFT[side] * direction * delta
        self.add(e, nt)
        return (s, side, nt)


# ---------------------------------------------------------------------------
# general position and overlay
# ---------------------------------------------------------------------------

def general_position(a: PLCurve, b: PLCurve):
    """Perturb ``b`` so that it shares no edge point with ``a``.

    Each clashing point of ``b`` moves to the left of its direction of travel
    by half the gap to its nearest neighbour on that edge.
    """
    if a.origami != b.origami:
        raise CurveError("curves live on different origamis")
    akeys = set(a.edge_points())
    bkeys = b.edge_points()
    if not any(k in akeys for k in bkeys):
        return a, b
    occ = Occupancy(a.origami, (a, b))
    pts = list(b.points)
    for i, k in enumerate(bkeys):
        if k in akeys:
            pts[i] = occ.offset(pts[i], +1)
    return a, PLCurve(b.origami, pts)


@dataclass
class Crossing:
    index: int
    square: int
    a_chord: int
    b_chord: int
    sign: int
    a_key: Fraction
    b_key: Fraction
    a_pos: int = -1
    b_pos: int = -1
    _a: Chord = field(default=None, repr=False)
    _b: Chord = field(default=None, repr=False)

    def point(self):
        """Exact coordinates of the crossing inside its square."""
        (x1, y1), (x2, y2) = coords(*self._a.entry), coords(*self._a.exit)
        (x3, y3), (x4, y4) = coords(*self._b.entry), coords(*self._b.exit)
        den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
        u = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
        return (x1 + u * (x2 - x1), y1 + u * (y2 - y1))


@dataclass
class IntersectionData:
    a: PLCurve
    b: PLCurve
    crossings: list
    a_order: list  # crossing indices in the order met along a
    b_order: list

    @property
    def count(self) -> int:
        return len(self.crossings)

    @property
    def algebraic(self) -> int:
        return sum(x.sign for x in self.crossings)

    @property
    def signs(self):
        return {x.sign for x in self.crossings}

    def sign_uniform(self) -> bool:
        return len(self.signs) <= 1


def _square_chords(c: PLCurve):
    d = defaultdict(list)
    for ch in c.chords():
        d[ch.square].append(ch)
    return d


def overlay(a: PLCurve, b: PLCurve) -> IntersectionData:
    """All crossings of ``a`` and ``b``; both must be in general position."""
    if a.origami != b.origami:
        raise CurveError("curves live on different origamis")
    if set(a.edge_points()) & set(b.edge_points()):
        raise CurveError("curves are not in general position")
    A = _square_chords(a)
    B = _square_chords(b)
    crossings = []
    for s, achs in A.items():
        bchs = B.get(s)
        if not bchs:
            continue
        for ca in achs:
            p, q = ca.p, ca.q
            span = _ccw(p, q)
            for cb in bchs:
                r, t = cb.p, cb.q
                dr = _ccw(p, r)
                ds = _ccw(p, t)
                r_in = dr < span
                if r_in == (ds < span):
                    continue
                sign = 1 if r_in else -1
                a_key = dr if r_in else ds
                # endpoint of a inside the counterclockwise arc from r to t
                b_key = _ccw(r, p) if _in_arc(r, t, p) else _ccw(r, q)
                crossings.append(Crossing(len(crossings), s, ca.index, cb.index, sign, a_key, b_key, _a=ca, _b=cb))
    a_order = sorted(range(len(crossings)), key=lambda i: (crossings[i].a_chord, crossings[i].a_key))
    b_order = sorted(range(len(crossings)), key=lambda i: (crossings[i].b_chord, crossings[i].b_key))
    for pos, i in enumerate(a_order):
        crossings[i].a_pos = pos
    for pos, i in enumerate(b_order):
        crossings[i].b_pos = pos
    return IntersectionData(a, b, crossings, a_order, b_order)


def algebraic_intersection(a: PLCurve, b: PLCurve) -> int:
    a, b = general_position(a, b)
    return overlay(a, b).algebraic


# ---------------------------------------------------------------------------
# complementary regions
# ---------------------------------------------------------------------------

@dataclass
class Face:
    fragments: int
    segments: int
    vertices: int
    corners: list  # (crossing index, a direction, b direction)

    @property
    def euler(self) -> int:
        return self.fragments - self.segments + self.vertices

    def is_disc(self) -> bool:
        return self.euler == 1


def faces(data: IntersectionData) -> list[Face]:
    """Connected components of the complement of ``a`` and ``b``.

    Each square is cut by the chords into convex fragments (traced as faces
    of the planar graph formed by the square boundary, chord pieces and
    crossings); fragments are glued across the pieces of square edges left
    free by the curves.  The Euler characteristic of a component counts
    fragments, free edge pieces and surface vertices inside it.
    """
    o = data.a.origami
    vclass = corner_classes(o)
    crossings = data.crossings
    A = _square_chords(data.a)
    B = _square_chords(data.b)
    along_a = defaultdict(list)
    along_b = defaultdict(list)
    for x in crossings:
        along_a[x.a_chord].append(x)
        along_b[x.b_chord].append(x)
    for lst in along_a.values():
        lst.sort(key=lambda x: x.a_key)
    for lst in along_b.values():
        lst.sort(key=lambda x: x.b_key)

    parent = []

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    frag_segs = []
    frag_verts = []
    frag_corners = []
    seg_owner = {}

    for s in range(o.n):
        # half-edge arrays for this square
        origin = []
        target = []
        twin = []
        kind = []  # 0 chord piece, 1 boundary ccw, 2 boundary cw
        info = []  # boundary: segment key; chord: (curve, direction)
        out = defaultdict(list)  # node -> [(sort key, half-edge)]

        def add_edge(u, w, k_fwd, k_bwd, i_fwd, i_bwd):
            h1 = len(origin)
            origin.extend((u, w))
            target.extend((w, u))
            twin.extend((h1 + 1, h1))
            kind.extend((k_fwd, k_bwd))
            info.extend((i_fwd, i_bwd))
            return h1, h1 + 1

        bnodes = [(Fraction(k), ("c", k)) for k in range(4)]
        chords_here = [(0, ch) for ch in A.get(s, ())] + [(1, ch) for ch in B.get(s, ())]
        for which, ch in chords_here:
            bnodes.append((ch.p, ("p", ch.p)))
            bnodes.append((ch.q, ("p", ch.q)))
        bnodes.sort(key=lambda z: z[0])
        nb = len(bnodes)
        rot = {}
        for i, (pos, node) in enumerate(bnodes):
            rot[node] = {"next": None, "prev": None, "chord": None}
        for i, (pos, node) in enumerate(bnodes):
            npos, nnode = bnodes[(i + 1) % nb]
            end = npos if i + 1 < nb else FOUR
            # the boundary piece from pos to end lies on side number floor(pos)
            side = int(pos)
            if side == 0:
                key = ("H", s, pos)
            elif side == 1:
                key = ("V", o.h[s], pos - 1)
            elif side == 2:
                key = ("H", o.v[s], 3 - end)
            else:
                key = ("V", s, 4 - end)
            fwd, bwd = add_edge(node, nnode, 1, 2, key, None)
            rot[node]["next"] = fwd
            rot[nnode]["prev"] = bwd
        xrot = {}
        for which, ch in chords_here:
            seq = along_a.get(ch.index, []) if which == 0 else along_b.get(ch.index, [])
            nodes = [("p", ch.p)] + [("x", x.index) for x in seq] + [("p", ch.q)]
            for j in range(len(nodes) - 1):
                fwd, bwd = add_edge(nodes[j], nodes[j + 1], 0, 0, (which, 1), (which, -1))
                u, w = nodes[j], nodes[j + 1]
                if u[0] == "p":
                    rot[u]["chord"] = fwd
                else:
                    xrot.setdefault(u, {})[(which, 1)] = fwd
                if w[0] == "p":
                    rot[w]["chord"] = bwd
                else:
                    xrot.setdefault(w, {})[(which, -1)] = bwd
        # counterclockwise outgoing order at every node
        ccw = {}
        for node, r in rot.items():
            if node[0] == "c":
                ccw[node] = [r["next"], r["prev"]]
            else:
                ccw[node] = [r["next"], r["chord"], r["prev"]]
        for node, r in xrot.items():
            sign = crossings[node[1]].sign
            if sign > 0:
                ccw[node] = [r[(0, 1)], r[(1, 1)], r[(0, -1)], r[(1, -1)]]
            else:
                ccw[node] = [r[(0, 1)], r[(1, -1)], r[(0, -1)], r[(1, 1)]]
        slot = [0] * len(origin)
        for node, lst in ccw.items():
            for i, he in enumerate(lst):
                slot[he] = i
        used = [False] * len(origin)
        for start in range(len(origin)):
            if used[start] or kind[start] == 2:
                continue
            segs = []
            verts = set()
            corners = []
            he = start
            while not used[he]:
                used[he] = True
                if kind[he] == 1:
                    segs.append(info[he])
                v = target[he]
                lst = ccw[v]
                nxt = lst[(slot[twin[he]] - 1) % len(lst)]
                if v[0] == "c":
                    verts.add(vclass[4 * s + v[1]])
                elif v[0] == "x":
                    d_in = info[twin[he]]
                    d_out = info[nxt]
                    da = d_in[1] if d_in[0] == 0 else d_out[1]
                    db = d_in[1] if d_in[0] == 1 else d_out[1]
                    corners.append((v[1], da, db))
                he = nxt
            fid = len(parent)
            parent.append(fid)
            frag_segs.append(segs)
            frag_verts.append(verts)
            frag_corners.append(corners)
            for key in segs:
                if key in seg_owner:
                    r1, r2 = find(seg_owner[key]), find(fid)
                    if r1 != r2:
                        parent[max(r1, r2)] = min(r1, r2)
                else:
                    seg_owner[key] = fid

    comps = defaultdict(lambda: [0, set(), set(), []])
    for fid in range(len(parent)):
        c = comps[find(fid)]
        c[0] += 1
        c[1].update(frag_segs[fid])
        c[2].update(frag_verts[fid])
        c[3].extend(frag_corners[fid])
    return [Face(f, len(sg), len(vt), cr) for f, sg, vt, cr in comps.values()]


# ---------------------------------------------------------------------------
# normalisation and bigon removal
# ---------------------------------------------------------------------------

def normalize(c: PLCurve) -> PLCurve:
    """Remove edge returns (chords entering and leaving through one side).

    Innermost returns are removed first, which is an isotopy keeping the
    curve embedded.  Raises ``NullHomotopic`` if nothing is left.
    """
    o = c.origami
    pts = list(c.points)
    m = len(pts)
    if m == 0:
        raise NullHomotopic("empty curve")
    nxt = [(i + 1) % m for i in range(m)]
    prv = [(i - 1) % m for i in range(m)]
    alive = [True] * m
    occ = defaultdict(list)
    ekey = [edge_of(o, s, side) for s, side, _ in pts]
    for i, (s, side, t) in enumerate(pts):
        occ[ekey[i]].append(t)
    for lst in occ.values():
        lst.sort()
    count = m

    def returns(k):
        j = prv[k]
        if j == k:
            return False
        es, eside, _ = across(o, pts[j])
        return es == pts[k][0] and eside == pts[k][1]

    changed = True
    start = 0
    while changed:
        changed = False
        k = start
        seen = 0
        limit = count
        while seen < limit and count > 0:
            seen += 1
            if not alive[k]:
                k = nxt[k]
                continue
            if returns(k):
                j = prv[k]
                if count == 2:
                    raise NullHomotopic("curve retracts into a square")
                lst = occ[ekey[k]]
                t1, t2 = sorted((pts[j][2], pts[k][2]))
                lo = bisect.bisect_right(lst, t1)
                hi = bisect.bisect_left(lst, t2)
                if hi == lo:
                    for i in (j, k):
                        alive[i] = False
                        lst.pop(bisect.bisect_left(lst, pts[i][2]))
                    a, b = prv[j], nxt[k]
                    nxt[a] = b
                    prv[b] = a
                    count -= 2
                    changed = True
                    start = b
                    k = b
                    continue
            k = nxt[k]
        if not changed:
            break
        if count == 0:
            raise NullHomotopic("curve retracts into a square")
    # walk the survivors starting from the first live index
    first = next(i for i in range(m) if alive[i])
    out = [pts[first]]
    k = nxt[first]
    while k != first:
        out.append(pts[k])
        k = nxt[k]
    return PLCurve(o, out)


def arc_points(curve: PLCurve, start, end, direction: int):
    """Exit points passed when walking along ``curve`` between two crossings.

    ``start`` and ``end`` are ``(chord index, key along chord)``; walking
    backward, points are expressed as exits in the backward direction.
    """
    m = len(curve.points)
    o = curve.origami
    i1, k1 = start
    i2, k2 = end
    res = []
    if direction > 0:
        if i1 == i2 and k1 < k2:
            return res
        j = i1
        while True:
            res.append(curve.points[j])
            j = (j + 1) % m
            if j == i2:
                return res
    if i1 == i2 and k2 < k1:
        return res
    j = i1
    while True:
        j = (j - 1) % m
        res.append(across(o, curve.points[j]))
        if j == i2:
            return res


def find_bigon(data: IntersectionData):
    """An innermost bigon as ``(x1, x2, da, db)`` or None.

    Candidates are disc components with exactly two corners at distinct
    crossings; the smallest (fewest fragments) wins, ties by crossing index.
    """
    best = None
    for f in faces(data):
        if len(f.corners) != 2 or not f.is_disc():
            continue
        (x1, da1, db1), (x2, da2, db2) = sorted(f.corners)
        if x1 == x2:
            continue
        key = (f.fragments, x1)
        if best is None or key < best[0]:
            best = (key, (x1, x2, da1, db1))
    return None if best is None else best[1]


def remove_bigon(data: IntersectionData, bigon) -> PLCurve:
    """Isotope ``a`` across a bigon so it runs beside the bigon's b-arc.

    The a-arc of the bigon is replaced by a parallel copy of its b-arc on the
    side away from the bigon, which removes exactly the two corner crossings.
    """
    a, b = data.a, data.b
    x1, x2, da, db = bigon
    X1, X2 = data.crossings[x1], data.crossings[x2]
    ka1, ka2 = (X1.a_chord, X1.a_key), (X2.a_chord, X2.a_key)
    kb1, kb2 = (X1.b_chord, X1.b_key), (X2.b_chord, X2.b_key)
    # walking the b-arc from x1 in direction db the bigon is on the left
    # iff -da*db*sign > 0
    far = -1 if -da * db * X1.sign > 0 else 1
    if da > 0:
        kept = arc_points(a, ka2, ka1, 1)
        bpts = arc_points(b, kb1, kb2, db)
    else:
        kept = arc_points(a, ka1, ka2, 1)
        bpts = arc_points(b, kb2, kb1, -db)
        far = -far
    occ = Occupancy(a.origami, (a, b))
    shifted = [occ.offset(p, far) for p in bpts]
    if not kept and not shifted:
        raise NullHomotopic("bigon removal left nothing")
    return normalize(PLCurve(a.origami, kept + shifted))


def reduce_to_minimal(a: PLCurve, b: PLCurve, max_steps: int | None = None):
    """Remove bigons until ``a`` and ``b`` are in minimal position.

    Only ``a`` moves.  Returns ``(a*, b*, data)``; the crossing count of
    ``data`` is the geometric intersection number.
    """
    a, b = general_position(b, a)[::-1]
    data = overlay(a, b)
    steps = 0
    while data.count and not data.sign_uniform():
        bigon = find_bigon(data)
        if bigon is None:
            break
        before = data.count
        a = remove_bigon(data, bigon)
        a, b = general_position(b, a)[::-1]
        data = overlay(a, b)
        if data.count > before - 2 or (before - data.count) % 2:
            raise CurveError(f"bigon removal went from {before} to {data.count} crossings")
        steps += 1
        if max_steps is not None and steps >= max_steps:
            break
    return a, b, data


def geometric_intersection(a: PLCurve, b: PLCurve) -> int:
    return reduce_to_minimal(a, b)[2].count


def is_coherent(a: PLCurve, b: PLCurve) -> bool:
    """Geometric intersection equals the absolute algebraic intersection."""
    data = reduce_to_minimal(a, b)[2]
    return data.count == abs(data.algebraic)


def is_filling(a: PLCurve, b: PLCurve) -> bool:
    """Is every component of the complement of ``a`` and ``b`` a disc?"""
    data = reduce_to_minimal(a, b)[2]
    if not data.count:
        return False
    return all(f.is_disc() for f in faces(data))
