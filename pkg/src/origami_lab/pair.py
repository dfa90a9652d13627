"""Origamis induced by coherent filling pairs, and back."""

from __future__ import annotations

from .curves import PLCurve, faces, reduce_to_minimal
from .origami import Origami, genus, is_one_one


class NotOrigamiPair(ValueError):
    pass


def pair_status(a: PLCurve, b: PLCurve):
    """``(data, reason)`` where reason is None for an origami pair."""
    a, b, data = reduce_to_minimal(a, b)
    if not data.count:
        return data, "curves are disjoint"
    if data.count != abs(data.algebraic):
        return data, "pair is not coherent"
    if not all(f.is_disc() for f in faces(data)):
        return data, "pair is not filling"
    return data, None


def origami_from_pair(a: PLCurve, b: PLCurve) -> Origami:
    """The [1,1]-origami whose squares are the crossings of ``a`` and ``b``.

    Square k is the k-th crossing along ``a``; ``h`` steps to the next
    crossing along ``a`` and ``v`` to the next crossing along ``b``
    (backwards along ``b`` when ``b`` crosses ``a`` from left to right, so
    that the squares keep the surface orientation).
    """
    data, reason = pair_status(a, b)
    if reason:
        raise NotOrigamiPair(reason)
    n = data.count
    xs = data.crossings
    h = tuple((k + 1) % n for k in range(n))
    v = [0] * n
    for j, xi in enumerate(data.b_order):
        nxt = data.b_order[(j + 1) % n]
        v[xs[xi].a_pos] = xs[nxt].a_pos
    if xs[0].sign < 0:
        inv = [0] * n
        for i, w in enumerate(v):
            inv[w] = i
        v = inv
    o = Origami(n, h, tuple(v))
    assert is_one_one(o)
    assert genus(o) == genus(a.origami), "induced origami changed the genus"
    return o


def subpair_origamis(path):
    """Origamis of all filling pairs in a verified edge-path.

    Returns ``(found, skipped)``: ``found`` holds ``(i, j, origami)`` and
    ``skipped`` holds ``(i, j, reason)``.
    """
    if not getattr(path, "verified", False):
        raise NotOrigamiPair("edge-path has not been verified")
    found, skipped = [], []
    cs = path.curves
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            data, reason = pair_status(cs[i], cs[j])
            if reason:
                skipped.append((i, j, reason))
            else:
                found.append((i, j, origami_from_pair(cs[i], cs[j])))
    return found, skipped
