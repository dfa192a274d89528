"""Deterministic SVG drawings of geometric instances.

Coordinates are mapped exactly into a 1000 x 1000 viewport (y pointing up in
the instance, down in SVG) and only then rounded to 12 decimal digits.
"""
from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape, quoteattr

from .exactgeom import GeomInstance, Segment

SIZE = 1000
MARGIN = 20
DIGITS = 12


def decimal_text(r: Fraction, digits: int = DIGITS) -> str:
    """``r`` rounded half-to-even at ``digits`` places, trailing zeros dropped."""
    scaled = round(Fraction(r) * 10 ** digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** digits)
    frac_text = str(frac).rjust(digits, "0").rstrip("0")
    return f"{sign}{whole}.{frac_text}" if frac_text else f"{sign}{whole}"


def _transform(inst: GeomInstance):
    pts = [p for o in inst.objects.values() for p in o.points]
    if not pts:
        return lambda p: (Fraction(0), Fraction(0))
    x0, x1 = min(p.x for p in pts), max(p.x for p in pts)
    y0, y1 = min(p.y for p in pts), max(p.y for p in pts)
    span = max(x1 - x0, y1 - y0)
    scale = Fraction(SIZE - 2 * MARGIN) / span if span else Fraction(1)
    # centre the drawing along the shorter axis
    ox = MARGIN + (SIZE - 2 * MARGIN - (x1 - x0) * scale) / 2
    oy = MARGIN + (SIZE - 2 * MARGIN - (y1 - y0) * scale) / 2

    def tr(p):
        return ox + (p.x - x0) * scale, oy + (y1 - p.y) * scale
    return tr


def _title(inst: GeomInstance, oid: str) -> str:
    text = oid
    if oid in inst.labels:
        text += f": {inst.labels[oid]}"
    if oid in inst.lists:
        text += " colors {" + ",".join(str(c) for c in sorted(inst.lists[oid])) + "}"
    return f"<title>{escape(text)}</title>"


def render_svg(inst: GeomInstance) -> str:
    tr = _transform(inst)
    body = []
    for oid, obj in inst.objects.items():
        pts = [tuple(decimal_text(c) for c in tr(p)) for p in obj.points]
        if isinstance(obj, Segment):
            (ax, ay), (bx, by) = pts
            body.append(f'<line id={quoteattr(oid)} x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}">'
                        f"{_title(inst, oid)}</line>")
        else:
            d = "M " + " L ".join(f"{x} {y}" for x, y in pts)
            body.append(f"<path id={quoteattr(oid)} d=\"{d}\">{_title(inst, oid)}</path>")
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">')
    group = '<g id="objects" fill="none" stroke="black" stroke-width="1">'
    return "\n".join([head, group, *body, "</g>", "</svg>"]) + "\n"
