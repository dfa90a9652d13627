"""Command-line interface: ``origami-lab <command> ...``.

Exit status is 0 on success, 2 when the input is well-formed but the
mathematics refuses it (invalid origami, non-filling pair, budget hit, ...)
and 1 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import io
from .bicorn import origami_edge_path, verify_edge_path
from .explorer import GreedyFailure, distance_bounds, greedy_path, growth_experiment, quotient_report
from .origami import InvalidOrigami, core_curves, enumerate_one_one, genus
from .pair import NotOrigamiPair, origami_from_pair
from .render import render_svg
from .twist import ChordBudgetExceeded, dehn_twist, iterate_pa


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(args, obj, text=None):
    if args.format == "json":
        print(json.dumps(obj, indent=1))
    elif text is not None:
        print(text)
    elif isinstance(obj, dict):
        w = max((len(k) for k in obj), default=0)
        for k, v in obj.items():
            print(f"{k:<{w}}  {v if not isinstance(v, (dict, list)) else json.dumps(v)}")
    else:
        print(obj)


def _table(rows, cols):
    cells = [[str(r[c]) for c in cols] for r in rows]
    w = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w[i]) for i, c in enumerate(cols))]
    lines += ["  ".join(x.rjust(w[i]) for i, x in enumerate(row)) for row in cells]
    return "\n".join(lines)


def _write_csv(path, rows, cols):
    with open(path, "w", newline="") as f:
        wr = csv.DictWriter(f, fieldnames=cols, extrasaction="ignore")
        wr.writeheader()
        wr.writerows(rows)


def _matrix(m):
    return "\n".join(" ".join(f"{x:>4}" for x in row) for row in m)


def _origami_of(path):
    kind, obj = io.load_any(path)
    if kind == "origami":
        return obj
    if kind == "curve":
        return obj.origami
    if kind == "curvepair":
        return obj[0].origami
    return obj.curves[0].origami


def _pair(files):
    """Two curves from one curve-pair file or two curve files."""
    if len(files) == 1:
        return io.load_curvepair(files[0])
    if len(files) == 2:
        a, b = io.load_curve(files[0]), io.load_curve(files[1])
        if a.origami != b.origami:
            raise io.FormatError("curves live on different origamis")
        return a, b
    raise UsageError("expected a curve-pair file or two curve files")


def _path_or_pair(files):
    if len(files) == 1:
        kind, obj = io.load_any(files[0])
        if kind == "path":
            verify_edge_path(obj)
            return obj
    a, b = _pair(files)
    return origami_edge_path(a, b)


def cmd_validate(args):
    kind, obj = io.load_any(args.file)
    if kind == "path":
        rep = verify_edge_path(obj)
        if not rep["ok"]:
            _emit(args, {"kind": kind, "valid": False, "report": rep})
            return 2
    _emit(args, {"kind": kind, "valid": True})
    return 0


def cmd_genus(args):
    g = genus(_origami_of(args.file))
    _emit(args, {"genus": g}, str(g))
    return 0


def cmd_cores(args):
    o = _origami_of(args.file)
    hor, ver = core_curves(o)
    obj = {
        "horizontal": [io.curve_to_json(c) for c in hor],
        "vertical": [io.curve_to_json(c) for c in ver],
    }
    if args.format == "json":
        _emit(args, obj)
    else:
        for name, cs in (("horizontal", hor), ("vertical", ver)):
            for c in cs:
                print(name, " ".join(f"{s}{side}{io.frac_str(t)}" for s, side, t in c.points))
    return 0


def cmd_enumerate(args):
    os_ = enumerate_one_one(args.n, args.genus)
    if args.format == "json":
        _emit(args, [io.origami_to_json(o) for o in os_])
    else:
        for o in os_:
            print(f"{o}  genus {genus(o)}")
        print(f"{len(os_)} origami(s)")
    return 0


def cmd_pair2origami(args):
    a, b = _pair(args.files)
    o = origami_from_pair(a, b)
    _emit(args, io.origami_to_json(o), str(o))
    return 0


def _path_out(args, path):
    if getattr(args, "out", None):
        io.write_json(io.path_to_json(path), args.out)
    if args.format == "json":
        _emit(args, io.path_to_json(path))
    else:
        print(f"length {path.length}  verified {path.verified}")
        print("intersection matrix:")
        print(_matrix(path.checks["geometric"]))


def cmd_bicorn_path(args):
    a, b = _pair(args.files)
    path = origami_edge_path(a, b)
    _path_out(args, path)
    return 0 if path.verified else 2


def cmd_verify_path(args):
    path = io.load_path(args.file)
    rep = verify_edge_path(path)
    _emit(args, {"ok": rep["ok"], "length": path.length, **{k: v for k, v in rep.items() if k != "ok"}})
    return 0 if rep["ok"] else 2


def cmd_twist(args):
    c = io.load_curve(args.about)
    g = io.load_curve(args.curve)
    out = dehn_twist(g, c, args.direction, args.budget)
    obj = io.curve_to_json(out)
    if args.out:
        io.write_json(obj, args.out)
    _emit(args, obj, f"{len(out.points)} chords")
    return 0


def cmd_iterate_pa(args):
    a, g = _pair(args.files)
    recs = iterate_pa(a, g, args.n, budget=args.budget)
    rows = [r.as_dict() for r in recs]
    if args.report:
        io.write_json({"rows": rows}, args.report)
    cols = ["n", "i_a", "i_g", "coherent_a", "coherent_g", "filling", "distance_lower", "chords"]
    if args.emit_csv:
        _write_csv(args.emit_csv, rows, cols)
    _emit(args, {"rows": rows}, _table(rows, cols))
    return 0


def cmd_quotients(args):
    path = _path_or_pair(args.files)
    q = quotient_report(path)
    rows = [
        {"k": k + 1, "i_b": nb, "i_a": na, "quotient": io.frac_str(x)}
        for k, ((nb, na), x) in enumerate(zip(q.pairs, q.quotients))
    ]
    if args.emit_csv:
        _write_csv(args.emit_csv, rows, ["k", "i_b", "i_a", "quotient"])
    text = _table(rows, ["k", "i_b", "i_a", "quotient"]) + f"\nstrictly decreasing: {q.strictly_decreasing}"
    _emit(args, {"rows": rows, "strictly_decreasing": q.strictly_decreasing}, text)
    return 0


def cmd_greedy(args):
    a, b = _pair(args.files)
    try:
        rep = greedy_path(a, b, args.cap)
    except GreedyFailure as e:
        _emit(args, {"failure": str(e), **e.datum})
        return 2
    _emit(args, rep.as_dict())
    return 0


def cmd_bounds(args):
    a, b = _pair(args.files)
    path = io.load_path(args.path) if args.path else None
    if path is not None:
        verify_edge_path(path)
    _emit(args, distance_bounds(a, b, path).as_dict())
    return 0


def cmd_growth(args):
    a, g = _pair(args.files)
    res = growth_experiment(a, g, args.n, budget=args.budget)
    cols = ["n", "i_a", "i_g", "coherent_a", "coherent_g", "filling", "distance_lower", "chords"]
    if args.emit_csv:
        _write_csv(args.emit_csv, res["rows"], cols)
    text = _table(res["rows"], cols) + f"\ni_a strictly increasing: {res['i_a_strictly_increasing']}"
    _emit(args, res, text)
    return 0


def cmd_render(args):
    origami, curves = None, []
    for f in args.files:
        kind, obj = io.load_any(f)
        if kind == "origami":
            o = obj
        elif kind == "curve":
            o, curves = obj.origami, curves + [obj]
        elif kind == "curvepair":
            o, curves = obj[0].origami, curves + list(obj)
        else:
            o, curves = obj.curves[0].origami, curves + list(obj.curves)
        if origami is not None and o != origami:
            raise io.FormatError("inputs live on different origamis")
        origami = o
    svg = render_svg(origami, curves)
    with open(args.out, "w") as fh:
        fh.write(svg)
    _emit(args, {"out": args.out, "squares": origami.n, "curves": len(curves)})
    return 0


def build_parser():
    p = _Parser(prog="origami-lab", description="Origamis, curves on them and origami edge-paths.")
    p.add_argument("--format", choices=("json", "text"), default="text")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "check an origami, curve, curve pair or edge-path file").add_argument("file")
    add("genus", cmd_genus, "genus of an origami").add_argument("file")
    add("cores", cmd_cores, "core curves of the cylinders").add_argument("file")
    sp = add("enumerate", cmd_enumerate, "[1,1] origamis with n squares up to isomorphism")
    sp.add_argument("n", type=int)
    sp.add_argument("--genus", type=int, default=None)
    add("pair2origami", cmd_pair2origami, "origami induced by a coherent filling pair").add_argument("files", nargs="+")
    sp = add("bicorn-path", cmd_bicorn_path, "bicorn edge-path between an origami pair")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--out")
    add("verify-path", cmd_verify_path, "check the edge-path conditions").add_argument("file")
    sp = add("twist", cmd_twist, "Dehn twist of a curve")
    sp.add_argument("--about", required=True)
    sp.add_argument("--direction", type=int, choices=(1, -1), default=1)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--out")
    sp.add_argument("curve")
    sp = add("iterate-pa", cmd_iterate_pa, "iterate h = T_a T_g^-1 on g")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--report")
    sp.add_argument("--budget", type=int)
    sp.add_argument("--emit-csv")
    sp.add_argument("files", nargs="+")
    sp = add("quotients", cmd_quotients, "intersection quotients along a path")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--emit-csv")
    sp = add("greedy", cmd_greedy, "greedy edge-path over bicorn candidates")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--cap", type=int, default=20)
    sp = add("bounds", cmd_bounds, "distance bounds")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--path")
    sp = add("growth", cmd_growth, "intersection growth under h = T_a T_g^-1")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--emit-csv")
    sp.add_argument("files", nargs="+")
    sp = add("render", cmd_render, "SVG drawing")
    sp.add_argument("--out", required=True)
    sp.add_argument("files", nargs="+")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    try:
        return args.func(args)
    except UsageError as e:
        print(f"origami-lab: error: {e}", file=sys.stderr)
        return 1
    except (InvalidOrigami, NotOrigamiPair, io.FormatError, ValueError,
            ChordBudgetExceeded, GreedyFailure, OSError) as e:
        print(f"origami-lab: {args.command}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
