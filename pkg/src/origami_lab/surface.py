"""Cell structure of an origami and the homology pairing of curves.

The 1-skeleton has the surface vertices (corner classes) as vertices and the
2n square sides as edges.  Vertical edge ``('V', k)`` is the left side of
square k oriented upward; horizontal edge ``('H', k)`` is the bottom side of
square k oriented rightward.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .curves import LEFT, PLCurve, CurveError, edge_of
from .origami import BL, BR, TL, Origami, check_origami, corner_classes, genus


@dataclass(frozen=True)
class SurfaceComplex:
    origami: Origami
    edges: tuple  # (edge, (square, side), (square, side), tail vertex, head vertex)
    vertices: tuple  # vertex label of each corner 4*s + corner
    num_vertices: int
    genus: int
    fundamental_cycles: tuple  # each a tuple of (edge, coefficient)

    @property
    def V(self):
        return self.num_vertices

    @property
    def E(self):
        return len(self.edges)

    @property
    def F(self):
        return self.origami.n

    def summary(self):
        return {"V": self.V, "E": self.E, "F": self.F, "genus": self.genus}


def build(o: Origami) -> SurfaceComplex:
    """Edges, vertices and a fundamental cycle basis of the 1-skeleton.

    The spanning tree is grown breadth-first from vertex 0, scanning edges in
    the order V0, H0, V1, H1, ...; each non-tree edge closes one cycle.
    """
    check_origami(o)
    vc = corner_classes(o)
    nv = len(set(vc))
    edges = []
    for k in range(o.n):
        edges.append((("V", k), (k, "L"), (o.h_inv[k], "R"), vc[4 * k + BL], vc[4 * k + TL]))
        edges.append((("H", k), (k, "B"), (o.v_inv[k], "T"), vc[4 * k + BL], vc[4 * k + BR]))
    adj = [[] for _ in range(nv)]
    for i, (_, _, _, u, w) in enumerate(edges):
        adj[u].append((i, w, 1))
        adj[w].append((i, u, -1))
    # signed edge path from each vertex back to the root
    to_root = [None] * nv
    to_root[0] = {}
    tree = set()
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for i, w, d in adj[u]:
            if to_root[w] is None:
                tree.add(i)
                path = dict(to_root[u])
                # walking w -> u uses edge i against direction d
                path[i] = path.get(i, 0) - d
                to_root[w] = path
                queue.append(w)
    cycles = []
    for i, (e, _, _, u, w) in enumerate(edges):
        if i in tree:
            continue
        z = {i: 1}
        for j, c in to_root[w].items():
            z[j] = z.get(j, 0) + c
        for j, c in to_root[u].items():
            z[j] = z.get(j, 0) - c
        cycles.append(tuple((edges[j][0], c) for j, c in sorted(z.items()) if c))
    g = genus(o)
    sc = SurfaceComplex(o, tuple(edges), tuple(vc), nv, g, tuple(cycles))
    assert nv - 2 * o.n + o.n == 2 - 2 * g
    assert len(cycles) == 2 * o.n - nv + 1
    return sc


def cycle_boundary(sc: SurfaceComplex, z) -> dict:
    """Boundary of an edge chain (zero for cycles)."""
    heads = {e: (u, w) for e, _, _, u, w in sc.edges}
    out = {}
    for e, c in z:
        u, w = heads[e]
        out[w] = out.get(w, 0) + c
        out[u] = out.get(u, 0) - c
    return {k: v for k, v in out.items() if v}


def pairing_with_cycle(c: PLCurve, z, sc: SurfaceComplex | None = None) -> int:
    """Signed count of crossings of ``c`` with the edge cycle ``z``.

    A crossing counts ``det(curve tangent, edge direction)`` times the
    coefficient of the edge in ``z``.
    """
    o = c.origami
    if sc is not None and sc.origami != o:
        raise CurveError("curve is not on this complex")
    coef = {}
    for e, k in z:
        coef[e] = coef.get(e, 0) + k
    total = 0
    for s, side, _ in c.points:
        k = coef.get(edge_of(o, s, side))
        if k:
            total += LEFT[side] * k
    return total


def homology_vector(c: PLCurve, sc: SurfaceComplex) -> tuple:
    """Pairings of ``c`` with every fundamental cycle."""
    return tuple(pairing_with_cycle(c, z, sc) for z in sc.fundamental_cycles)


def is_nonseparating(c: PLCurve, sc: SurfaceComplex | None = None) -> bool:
    """Nonzero homology class, equivalently connected complement."""
    sc = sc or build(c.origami)
    return any(homology_vector(c, sc))
