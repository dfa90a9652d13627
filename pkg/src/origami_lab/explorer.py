"""Experiments on origami edge-paths: intersection quotients, greedy paths
and distance bounds.

Nothing here returns a verdict on quasi-geodesics.  Reports carry data
(lengths, quotients, flags) only.  The greedy search looks for the next
curve among the bicorns of ``(current, b)``, not among all curves, and
every report says so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bicorn import (
    Bicorn,
    BicornError,
    EdgePath,
    enumerate_bicorns,
    minimal_pair,
    origami_edge_path,
    verify_edge_path,
)
from .curves import CurveError, PLCurve, is_filling, reduce_to_minimal
from .pair import NotOrigamiPair, pair_status
from .surface import build, homology_vector
from .twist import iterate_pa

UNIVERSE = "bicorns of (current, b)"


def _i(x: PLCurve, y: PLCurve) -> int:
    return reduce_to_minimal(x, y)[2].count


def _coherent(x: PLCurve, y: PLCurve) -> bool:
    d = reduce_to_minimal(x, y)[2]
    return d.count == abs(d.algebraic)


@dataclass
class QuotientReport:
    path: EdgePath
    pairs: list  # (i(b, v_k), i(a, v_k)) for 0 < k < n, unreduced
    quotients: list
    strictly_decreasing: bool

    def as_dict(self):
        return {
            "pairs": [list(p) for p in self.pairs],
            "quotients": [f"{q.numerator}/{q.denominator}" for q in self.quotients],
            "strictly_decreasing": self.strictly_decreasing,
        }


def quotient_report(path: EdgePath, a: PLCurve | None = None, b: PLCurve | None = None) -> QuotientReport:
    """Quotients ``i(b, v_k) / i(a, v_k)`` along a verified path.

    ``a`` and ``b`` default to the ends of the path.
    """
    if not path.verified:
        raise CurveError("edge-path has not been verified")
    cs = path.curves
    a = cs[0] if a is None else a
    b = cs[-1] if b is None else b
    pairs, qs = [], []
    for k in range(1, len(cs) - 1):
        nb, na = _i(b, cs[k]), _i(a, cs[k])
        if na == 0:
            raise CurveError(f"curve {k} is disjoint from a; quotient undefined")
        pairs.append((nb, na))
        qs.append(Fraction(nb, na))
    dec = all(x > y for x, y in zip(qs, qs[1:]))
    return QuotientReport(path, pairs, qs, dec)


quotient_sequence = quotient_report


class GreedyFailure(RuntimeError):
    """Greedy search stopped; ``datum`` is a JSON-ready description."""

    def __init__(self, message, datum):
        super().__init__(message)
        self.datum = datum


def greedy_candidates(current: PLCurve, a: PLCurve, b: PLCurve):
    """``(index, bicorn, i(b, x))`` for every admissible candidate."""
    out = []
    for idx, bc in enumerate(enumerate_bicorns(current, b)):
        x = bc.curve
        if _i(current, x) != 1:
            continue
        if not (_coherent(a, x) and _coherent(b, x)):
            continue
        out.append((idx, bc, _i(b, x)))
    return out


def _greedy_step(current, a, b) -> Bicorn:
    cands = greedy_candidates(current, a, b)
    if not cands:
        raise GreedyFailure(
            "no admissible candidate",
            {"reason": "empty candidate set", "i_current_b": _i(current, b), "universe": UNIVERSE},
        )
    best = min(cands, key=lambda c: (c[2], c[0]))
    assert all(best[2] <= c[2] for c in cands)
    return best[1]


def greedy_next(current: PLCurve, a: PLCurve, b: PLCurve) -> PLCurve:
    """Candidate meeting ``current`` once, coherent with ``a`` and ``b``,
    with the fewest crossings with ``b``; ties go to the first enumerated.
    """
    return _greedy_step(current, a, b).curve


@dataclass
class ExplorationReport:
    best_path: EdgePath
    origami_length_upper: int
    greedy_length: int | None
    bicorn_length: int | None
    log: list = field(default_factory=list)
    universe: str = UNIVERSE

    def as_dict(self):
        return {
            "origami_length_upper": self.origami_length_upper,
            "greedy_length": self.greedy_length,
            "bicorn_length": self.bicorn_length,
            "universe": self.universe,
            "log": self.log,
        }


def greedy_path(a: PLCurve, b: PLCurve, cap: int = 20) -> ExplorationReport:
    """Greedy edge-path from ``a`` to ``b``, compared with the bicorn path.

    Raises :class:`GreedyFailure` when the cap is hit or no candidate
    exists; the bicorn path length is then in the failure datum.
    """
    if a == b:
        p = EdgePath([a])
        verify_edge_path(p)
        return ExplorationReport(p, 0, 0, 0, [{"note": "a equals b"}])
    _, reason = pair_status(a, b)
    if reason:
        raise NotOrigamiPair(reason)
    bicorn = origami_edge_path(a, b)
    a_min, b_min, _ = minimal_pair(a, b)
    log = []
    curves = [a_min]
    cur = a_min
    try:
        while True:
            if len(curves) > cap:
                raise GreedyFailure(
                    f"cap of {cap} steps exceeded",
                    {"reason": "cap exceeded", "cap": cap, "universe": UNIVERSE},
                )
            bc = _greedy_step(cur, a_min, b_min)
            log.append({"step": len(curves), "i_b": _i(b_min, bc.curve), "kind": bc.kind})
            curves.append(bc.curve)
            cur = bc.curve
            if bc.kind == "b":
                break
    except GreedyFailure as e:
        e.datum.update({"bicorn_length": bicorn.length, "steps": log})
        raise
    except BicornError as e:
        raise GreedyFailure(str(e), {"reason": "bicorn error", "detail": str(e),
                                     "bicorn_length": bicorn.length, "steps": log}) from e
    greedy = EdgePath(curves)
    verify_edge_path(greedy)
    if not greedy.verified:
        raise GreedyFailure(
            "greedy path failed verification",
            {"reason": "unverified", "report": _jsonable(greedy.checks["report"]),
             "bicorn_length": bicorn.length, "steps": log},
        )
    best = greedy if greedy.length <= bicorn.length else bicorn
    return ExplorationReport(best, best.length, greedy.length, bicorn.length, log)


def _jsonable(report):
    return {k: [list(x) if isinstance(x, tuple) else x for x in v] for k, v in report.items()}


@dataclass
class DistanceBounds:
    lower: int
    reason: str  # "equal", "undetermined", "distinct", "intersecting" or "filling"
    upper_rasmussen: int | None = None
    upper_ns: int | None = None
    upper_ns_certified: bool = False

    def as_dict(self):
        return {
            "lower": self.lower,
            "reason": self.reason,
            "upper_rasmussen": self.upper_rasmussen,
            "upper_ns": self.upper_ns,
            "upper_ns_certified": self.upper_ns_certified,
        }


def distance_bounds(a: PLCurve, b: PLCurve, path: EdgePath | None = None) -> DistanceBounds:
    """Lower bound from intersection and filling; upper bounds from a path.

    Disjoint curves count as distinct only when their homology classes
    differ up to sign; otherwise the lower bound stays at 0.  The NS upper
    bound doubles the path length without building the certificate.
    """
    n = _i(a, b)
    if n == 0:
        if a == b:
            lower, reason = 0, "equal"
        else:
            sc = build(a.origami)
            ha, hb = homology_vector(a, sc), homology_vector(b, sc)
            if ha == hb or ha == tuple(-x for x in hb):
                lower, reason = 0, "undetermined"
            else:
                lower, reason = 1, "distinct"
    elif is_filling(a, b):
        lower, reason = 3, "filling"
    else:
        lower, reason = 2, "intersecting"
    db = DistanceBounds(lower, reason)
    if path is not None:
        if not path.verified:
            raise CurveError("edge-path has not been verified")
        db.upper_rasmussen = path.length
        db.upper_ns = 2 * path.length
        assert lower <= db.upper_rasmussen
    return db


def growth_experiment(a: PLCurve, g: PLCurve, N: int, budget: int | None = None):
    """Rows for ``h^n(g)``, ``n = 0..N``, with ``h = T_a o T_g^{-1}``."""
    rows = []
    for r in iterate_pa(a, g, N, budget=budget, with_zero=True):
        rows.append(r.as_dict())
    # the n = 0 row is g itself, so growth is measured from n = 1
    it = rows[1:]
    incr = all(x["i_a"] < y["i_a"] for x, y in zip(it, it[1:]))
    return {"rows": rows, "i_a_strictly_increasing": incr}
