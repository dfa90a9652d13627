"""Origamis (square-tiled surfaces) given by a pair of permutations.

Square ``s`` has its right edge glued to the left edge of ``h[s]`` and its
top edge glued to the bottom edge of ``v[s]``.  Permutations are stored as
tuples of images, 0-indexed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class InvalidOrigami(ValueError):
    pass


# ---------------------------------------------------------------------------
# permutation helpers
# ---------------------------------------------------------------------------

def perm_check(p) -> bool:
    n = len(p)
    return sorted(p) == list(range(n))


def perm_invert(p):
    q = [0] * len(p)
    for i, j in enumerate(p):
        q[j] = i
    return tuple(q)


def perm_compose(p, q):
    """Return ``p o q``, i.e. ``i -> p[q[i]]``."""
    return tuple(p[j] for j in q)


def perm_cycles(p):
    """Cycle decomposition, each cycle starting at its smallest element.

    >>> perm_cycles((1, 0, 2))
    [(0, 1), (2,)]
    """
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i]:
            continue
        c = []
        j = i
        while not seen[j]:
            seen[j] = True
            c.append(j)
            j = p[j]
        cycles.append(tuple(c))
    return cycles


def perm_from_cycles(cycles, n):
    p = list(range(n))
    for c in cycles:
        for i, x in enumerate(c):
            p[x] = c[(i + 1) % len(c)]
    return tuple(p)


def perm_power(p, k):
    n = len(p)
    if k < 0:
        p, k = perm_invert(p), -k
    out = tuple(range(n))
    for _ in range(k):
        out = perm_compose(p, out)
    return out


# ---------------------------------------------------------------------------
# origamis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Origami:
    n: int
    h: tuple
    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(x) for x in self.h))
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))

    @classmethod
    def from_cycles(cls, n, h_cycles=(), v_cycles=()):
        return cls(n, perm_from_cycles(h_cycles, n), perm_from_cycles(v_cycles, n))

    @property
    def h_inv(self):
        return perm_invert(self.h)

    @property
    def v_inv(self):
        return perm_invert(self.v)

    def relabel(self, sigma) -> "Origami":
        """Origami obtained by renaming square ``s`` to ``sigma[s]``."""
        h = [0] * self.n
        v = [0] * self.n
        for s in range(self.n):
            h[sigma[s]] = sigma[self.h[s]]
            v[sigma[s]] = sigma[self.v[s]]
        return Origami(self.n, tuple(h), tuple(v))

    def __str__(self):
        def cyc(p):
            return "".join("(" + ",".join(map(str, c)) + ")" for c in perm_cycles(p) if len(c) > 1) or "()"
        return f"Origami(n={self.n}, h={cyc(self.h)}, v={cyc(self.v)})"


def validate(o: Origami) -> list[str]:
    """Return the list of violated origami invariants (empty when valid).

    >>> validate(Origami(2, (0, 1), (0, 1)))
    ['squares do not form a connected surface']
    """
    problems = []
    if o.n < 1:
        return ["n must be positive"]
    for name, p in (("h", o.h), ("v", o.v)):
        if len(p) != o.n:
            problems.append(f"{name} has {len(p)} entries, expected {o.n}")
        elif not perm_check(p):
            problems.append(f"{name} is not a bijection of 0..{o.n - 1}")
    if problems:
        return problems
    seen = {0}
    stack = [0]
    while stack:
        s = stack.pop()
        for t in (o.h[s], o.v[s]):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    if len(seen) != o.n:
        problems.append("squares do not form a connected surface")
    return problems


def check_origami(o: Origami) -> None:
    problems = validate(o)
    if problems:
        raise InvalidOrigami("; ".join(problems))


# corners of a square, in counterclockwise order starting bottom-left
BL, BR, TR, TL = range(4)


def corner_classes(o: Origami) -> list[int]:
    """Label each of the 4n square corners ``4*s + corner`` by its vertex.

    Corners are merged through the side gluings; labels are numbered in order
    of first appearance.
    """
    parent = list(range(4 * o.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        x, y = find(x), find(y)
        if x != y:
            parent[max(x, y)] = min(x, y)

    for s in range(o.n):
        r, t = o.h[s], o.v[s]
        union(4 * s + BR, 4 * r + BL)
        union(4 * s + TR, 4 * r + TL)
        union(4 * s + TL, 4 * t + BL)
        union(4 * s + TR, 4 * t + BR)
    labels = {}
    out = []
    for c in range(4 * o.n):
        out.append(labels.setdefault(find(c), len(labels)))
    return out


def num_vertices(o: Origami) -> int:
    check_origami(o)
    v_corner = len(set(corner_classes(o)))
    commutator = perm_compose(perm_compose(o.h, o.v), perm_compose(o.h_inv, o.v_inv))
    assert v_corner == len(perm_cycles(commutator)), "corner closure disagrees with commutator"
    return v_corner


def genus(o: Origami) -> int:
    """Genus from V - E + F = 2 - 2g with E = 2n and F = n.

    >>> genus(Origami.from_cycles(3, [(0, 1)], [(0, 2)]))
    2
    """
    V = num_vertices(o)
    twice = o.n - V + 2
    assert twice % 2 == 0 and twice >= 0
    return twice // 2


def cylinders(o: Origami):
    """Horizontal cylinders (cycles of h) and vertical cylinders (cycles of v)."""
    check_origami(o)
    return perm_cycles(o.h), perm_cycles(o.v)


def is_one_one(o: Origami) -> bool:
    hor, ver = cylinders(o)
    return len(hor) == 1 and len(ver) == 1


def _bfs_relabel(o: Origami, base: int):
    sigma = [-1] * o.n
    sigma[base] = 0
    order = [base]
    k = 1
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for t in (o.h[s], o.v[s]):
            if sigma[t] < 0:
                sigma[t] = k
                k += 1
                order.append(t)
    return sigma


def canonical_form(o: Origami):
    """Canonical representative of the isomorphism class and the relabeling.

    Isomorphism of origamis is simultaneous conjugacy of ``(h, v)``.  For each
    base square the squares are renumbered by breadth-first search (``h``
    before ``v``); the lexicographically least ``(h, v)`` wins.  Returns
    ``(canonical, sigma)`` where ``canonical == o.relabel(sigma)``.
    """
    check_origami(o)
    best = None
    for b in range(o.n):
        sigma = _bfs_relabel(o, b)
        r = o.relabel(sigma)
        key = (r.h, r.v)
        if best is None or key < best[0]:
            best = (key, r, tuple(sigma))
    return best[1], best[2]


def is_isomorphic(o1: Origami, o2: Origami) -> bool:
    return o1.n == o2.n and canonical_form(o1)[0] == canonical_form(o2)[0]


def _n_cycles(n):
    # every n-cycle as an image tuple, 0 -> c1 -> ... -> c_{n-1} -> 0
    for rest in itertools.permutations(range(1, n)):
        cyc = (0,) + rest
        yield perm_from_cycles([cyc], n)


def enumerate_one_one(n: int, g: int | None = None) -> list[Origami]:
    """All [1,1]-origamis with ``n`` squares up to isomorphism.

    ``h`` is fixed to the cycle ``(0 1 ... n-1)`` and ``v`` runs over all
    n-cycles; results are canonical forms sorted by ``(h, v)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    h = tuple((i + 1) % n for i in range(n))
    found = {}
    for v in _n_cycles(n):
        o = Origami(n, h, v)
        if g is not None and genus(o) != g:
            continue
        c, _ = canonical_form(o)
        found.setdefault((c.h, c.v), c)
    return [found[k] for k in sorted(found)]


def core_curves(o: Origami):
    """Core curves of the horizontal and vertical cylinders.

    Horizontal cores run rightward at height 1/2, vertical cores run upward at
    abscissa 1/2; one curve per cylinder.
    """
    from .curves import PLCurve, HALF

    check_origami(o)
    hor, ver = cylinders(o)
    hcores = [PLCurve(o, tuple((s, "R", HALF) for s in cyc)) for cyc in hor]
    vcores = [PLCurve(o, tuple((s, "T", HALF) for s in cyc)) for cyc in ver]
    return hcores, vcores
