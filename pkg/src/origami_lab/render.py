"""Deterministic SVG drawings of origamis and curves on them.

Squares are laid out one row per horizontal cylinder.  Each square shows
its index, and each boundary edge is labelled with the square glued across
it.  Curves are drawn chord by chord from their exact points; consecutive
chords that meet in the drawing are merged into one polyline.  When two or
more curves are drawn, their crossings are marked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .curves import CurveError, Occupancy, PLCurve, coords, overlay
from .origami import Origami, cylinders

PALETTE = ("#c0392b", "#222222", "#2471a3", "#1e8449", "#7d3c98", "#b9770e")


@dataclass(frozen=True)
class RenderSpec:
    unit: int = 80
    margin: int = 24
    palette: tuple = PALETTE
    labels: bool = True


def _num(x) -> str:
    """Fixed-precision decimal, rounded exactly from a rational."""
    q = round(Fraction(x) * 1000)
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // 1000}.{q % 1000:03d}".rstrip("0").rstrip(".")


def layout(o: Origami):
    """Grid position ``(column, row)`` of every square."""
    pos = {}
    for r, cyl in enumerate(cylinders(o)[0]):
        for col, s in enumerate(cyl):
            pos[s] = (col, r)
    return pos


def render_svg(o: Origami, curves=(), spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    curves = list(curves)
    for c in curves:
        if c.origami != o:
            raise CurveError("all curves must live on the rendered origami")
    curves = _separate(o, curves)
    u, m = spec.unit, spec.margin
    pos = layout(o)
    cols = max(c for c, _ in pos.values()) + 1
    rows = max(r for _, r in pos.values()) + 1
    width, height = cols * u + 2 * m, rows * u + 2 * m

    def pixel(s, x, y):
        col, row = pos[s]
        return (m + (col + Fraction(x)) * u, m + (row + 1 - Fraction(y)) * u)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g class="squares" fill="none" stroke="#888888" stroke-width="1">',
    ]
    for s in range(o.n):
        x, y = pixel(s, 0, 1)
        out.append(f'<rect data-square="{s}" x="{_num(x)}" y="{_num(y)}" width="{u}" height="{u}"/>')
    out.append("</g>")
    if spec.labels:
        out.append('<g class="labels" font-family="monospace" font-size="10" fill="#555555" text-anchor="middle">')
        fs = Fraction(1, 8)
        for s in range(o.n):
            for (x, y), text in (
                ((Fraction(1, 2), Fraction(1, 2)), str(s)),
                ((Fraction(1, 2), 1 - fs), f"v{o.v[s]}"),
                ((Fraction(1, 2), fs / 2), f"v{o.v_inv[s]}"),
                ((fs, Fraction(1, 2)), f"h{o.h_inv[s]}"),
                ((1 - fs, Fraction(1, 2)), f"h{o.h[s]}"),
            ):
                px, py = pixel(s, x, y)
                out.append(f'<text x="{_num(px)}" y="{_num(py)}">{escape(text)}</text>')
        out.append("</g>")
    for k, c in enumerate(curves):
        colour = spec.palette[k % len(spec.palette)]
        out.append(f'<g class="curve" data-curve="{k}" fill="none" stroke="{colour}" stroke-width="2">')
        for line in _polylines(c, pixel):
            pts = " ".join(f"{_num(x)},{_num(y)}" for x, y in line)
            out.append(f'<polyline points="{pts}"/>')
        out.append("</g>")
    if len(curves) >= 2:
        out.append('<g class="crossings" fill="#000000">')
        for i in range(len(curves)):
            for j in range(i + 1, len(curves)):
                for x in overlay(curves[i], curves[j]).crossings:
                    px, py = pixel(x.square, *x.point())
                    out.append(f'<circle data-pair="{i},{j}" cx="{_num(px)}" cy="{_num(py)}" r="3"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _polylines(c: PLCurve, pixel):
    lines = []
    for ch in c.chords():
        p = pixel(ch.square, *coords(*ch.entry))
        q = pixel(ch.square, *coords(*ch.exit))
        if lines and lines[-1][-1] == p:
            lines[-1].append(q)
        else:
            lines.append([p, q])
    if len(lines) > 1 and lines[-1][-1] == lines[0][0]:
        lines[0] = lines.pop() + lines[0][1:]
    return lines


def _separate(o, curves):
    """Shift points shared with earlier curves so every pair is transverse."""
    out = []
    for c in curves:
        taken = {k for d in out for k in d.edge_points()}
        keys = c.edge_points()
        if taken.isdisjoint(keys):
            out.append(c)
            continue
        occ = Occupancy(o, out + [c])
        pts = [occ.offset(pt, 1) if k in taken else pt for pt, k in zip(c.points, keys)]
        out.append(PLCurve(o, pts))
    return out
