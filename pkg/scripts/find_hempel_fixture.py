"""Search for a genus-2 [1,1] origami whose core curves reproduce the
published bicorn-path numbers of Hempel's pair.

The target is a path a = c0, c1, c2, c3, c4 = b with
i(b, ck) / i(a, ck) = 4/1, 2/8, 1/19.  For the bicorn construction used
by ``origami_edge_path`` these counts are the lengths of the a-arc and
b-arc of each bicorn, which turns the target into conditions on the
vertical permutation when squares are labelled along the horizontal core.
Candidates are generated from their commutator, then checked with the
curve kernel.  Usage: python3 scripts/find_hempel_fixture.py [n_max]
"""

import itertools
import json
import sys
from fractions import Fraction

from origami_lab.bicorn import origami_edge_path
from origami_lab.explorer import quotient_report
from origami_lab.io import curvepair_to_json, origami_to_json
from origami_lab.origami import Origami, core_curves, genus, is_one_one
from origami_lab.pair import subpair_origamis

TARGET = [Fraction(4, 1), Fraction(2, 8), Fraction(1, 19)]


def orbit(v, x, steps):
    out = [x]
    for _ in range(steps):
        out.append(v[out[-1]])
    return out


def matches(v, n):
    o = orbit(v, 0, 19)
    if o[1] != n - 4 or o[8] != n - 2 or o[19] != n - 1:
        return False
    if any(x in (n - 3, n - 2, n - 1) for x in o[2:8]):
        return False
    return all(x != n - 1 for x in o[9:19])


def is_ncycle(p):
    n = len(p)
    x, k = p[0], 1
    while x != 0:
        x, k = p[x], k + 1
    return k == n


def commutators(n):
    for a, b, c in itertools.combinations(range(n), 3):
        for x, y, z in ((a, b, c), (a, c, b)):
            p = list(range(n))
            p[x], p[y], p[z] = y, z, x
            yield p
    for quad in itertools.combinations(range(n), 4):
        a, b, c, d = quad
        for (p1, p2), (p3, p4) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            p = list(range(n))
            p[p1], p[p2], p[p3], p[p4] = p2, p1, p4, p3
            yield p


def candidates(n):
    hinv = [(i - 1) % n for i in range(n)]
    for c in commutators(n):
        k = [c[hinv[i]] for i in range(n)]
        if not is_ncycle(k):
            continue
        for m in range(n):
            v = [0] * n
            x = m
            for i in range(n):
                v[(-i) % n] = x
                x = k[x]
            if not is_ncycle(v):
                continue
            # try every base square by rotating labels
            for s in range(n):
                w = [(v[(i + s) % n] - s) % n for i in range(n)]
                if matches(w, n):
                    yield tuple(w)


def check(v):
    n = len(v)
    o = Origami(n, tuple((i + 1) % n for i in range(n)), v)
    if genus(o) != 2 or not is_one_one(o):
        return None
    (a,), (b,) = core_curves(o)
    path = origami_edge_path(a, b)
    if not path.verified or path.length != 4:
        return None
    q = quotient_report(path)
    if q.quotients != TARGET:
        return None
    found, _ = subpair_origamis(path)
    pairs = {(i, j) for i, j, _ in found}
    if not {(0, 3), (1, 4)} <= pairs:
        return None
    return o, a, b


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 24
    seen = set()
    for n in range(20, n_max + 1):
        for v in candidates(n):
            if v in seen:
                continue
            seen.add(v)
            hit = check(v)
            if hit:
                o, a, b = hit
                print(json.dumps(origami_to_json(o)))
                print(json.dumps(curvepair_to_json(a, b)))
                return 0
        print(f"n={n}: no match", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
