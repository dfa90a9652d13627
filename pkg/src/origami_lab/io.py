"""JSON formats for origamis, curves, curve pairs and edge-paths.

Rationals are written as exact ``"p/q"`` strings; there are no floats in
any format.  A curve's ``"origami"`` field is either an inline origami or a
path to an ``.origami.json`` file, resolved relative to the curve file.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .curves import PLCurve, as_fraction, check_curve
from .origami import Origami, check_origami


class FormatError(ValueError):
    pass


def frac_str(t: Fraction) -> str:
    t = Fraction(t)
    return f"{t.numerator}/{t.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, float):
        raise FormatError(f"floating point value {s!r}; write rationals as 'p/q'")
    try:
        return as_fraction(s)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise FormatError(f"bad rational {s!r}") from e


def origami_to_json(o: Origami) -> dict:
    return {"n": o.n, "h": list(o.h), "v": list(o.v)}


def origami_from_json(d) -> Origami:
    try:
        n, h, v = d["n"], d["h"], d["v"]
    except (KeyError, TypeError) as e:
        raise FormatError("origami needs keys 'n', 'h', 'v'") from e
    if not isinstance(n, int) or not all(isinstance(x, int) for x in list(h) + list(v)):
        raise FormatError("origami entries must be integers")
    o = Origami(n, tuple(h), tuple(v))
    check_origami(o)
    return o


def curve_to_json(c: PLCurve, origami=None) -> dict:
    """``origami`` may be a file reference to use instead of an inline copy."""
    return {
        "origami": origami if origami is not None else origami_to_json(c.origami),
        "points": [[s, side, frac_str(t)] for s, side, t in c.points],
    }


def _points(raw):
    try:
        return [(int(s), str(side), parse_frac(t)) for s, side, t in raw]
    except (TypeError, ValueError) as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError("points must be [square, side, 'p/q'] triples") from e


def _resolve_origami(ref, base: Path | None) -> Origami:
    if isinstance(ref, str):
        p = Path(ref)
        if base is not None and not p.is_absolute():
            p = base / p
        return load_origami(p)
    return origami_from_json(ref)


def curve_from_json(d, origami: Origami | None = None, base: Path | None = None) -> PLCurve:
    if origami is None:
        if "origami" not in d:
            raise FormatError("curve needs an 'origami' field")
        origami = _resolve_origami(d["origami"], base)
    if "points" not in d:
        raise FormatError("curve needs a 'points' field")
    c = PLCurve(origami, _points(d["points"]))
    check_curve(c)
    return c


def curvepair_to_json(a: PLCurve, b: PLCurve) -> dict:
    if a.origami != b.origami:
        raise FormatError("curves live on different origamis")
    return {
        "origami": origami_to_json(a.origami),
        "a": curve_to_json(a)["points"],
        "b": curve_to_json(b)["points"],
    }


def curvepair_from_json(d, base: Path | None = None):
    try:
        o = _resolve_origami(d["origami"], base)
        return curve_from_json({"points": d["a"]}, o), curve_from_json({"points": d["b"]}, o)
    except KeyError as e:
        raise FormatError(f"curve pair is missing {e}") from e


def path_to_json(path) -> dict:
    """EdgePath as ``{"curves", "checks", "length"}``; curves share one origami."""
    checks = dict(path.checks)
    if "origamis" in checks:
        checks["origamis"] = [[i, j, origami_to_json(o)] for i, j, o in checks["origamis"]]
    if "report" in checks:
        checks["report"] = {k: [list(x) if isinstance(x, tuple) else x for x in v] for k, v in checks["report"].items()}
    return {
        "origami": origami_to_json(path.curves[0].origami) if path.curves else None,
        "curves": [curve_to_json(c)["points"] for c in path.curves],
        "checks": checks,
        "length": path.length,
    }


def path_from_json(d, base: Path | None = None):
    from .bicorn import EdgePath

    try:
        o = _resolve_origami(d["origami"], base)
        curves = [curve_from_json({"points": pts}, o) for pts in d["curves"]]
    except KeyError as e:
        raise FormatError(f"edge-path is missing {e}") from e
    if "length" in d and d["length"] != len(curves) - 1:
        raise FormatError("edge-path length does not match its curves")
    checks = dict(d.get("checks", {}))
    if "origamis" in checks:
        checks["origamis"] = [(i, j, origami_from_json(x)) for i, j, x in checks["origamis"]]
    if "report" in checks:
        checks["report"] = {k: [tuple(x) if isinstance(x, list) else x for x in v] for k, v in checks["report"].items()}
    return EdgePath(curves, checks=checks, verified=bool(checks.get("ok", False)))


def read_json(path):
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: malformed JSON ({e})") from e


def write_json(obj, path):
    with open(path, "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")


def load_origami(path) -> Origami:
    return origami_from_json(read_json(path))


def load_curve(path) -> PLCurve:
    p = Path(path)
    return curve_from_json(read_json(p), base=p.parent)


def load_curvepair(path):
    p = Path(path)
    return curvepair_from_json(read_json(p), base=p.parent)


def load_path(path):
    p = Path(path)
    return path_from_json(read_json(p), base=p.parent)


def load_any(path):
    """Read a file and guess its kind: origami, curve, curve pair or edge-path."""
    p = Path(path)
    d = read_json(p)
    if not isinstance(d, dict):
        raise FormatError(f"{path}: expected a JSON object")
    if "curves" in d:
        return "path", path_from_json(d, p.parent)
    if "a" in d and "b" in d:
        return "curvepair", curvepair_from_json(d, p.parent)
    if "points" in d:
        return "curve", curve_from_json(d, base=p.parent)
    if "n" in d:
        return "origami", origami_from_json(d)
    raise FormatError(f"{path}: unrecognised document")
