"""Exact-rational segments and polygonal curves, and their intersection graphs.

Coordinates are ``fractions.Fraction`` values. Intersections are closed: two
objects that touch at an endpoint or overlap collinearly intersect.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Union

from .graph import Graph

Rational = Fraction


class InstanceParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer. Decimal notation is rejected."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        p, q = int(num), int(den)
        if q == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(p, q)
    return Fraction(int(text))


def format_rational(r: Fraction) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


class Point(NamedTuple):
    x: Fraction
    y: Fraction


def point(x, y) -> Point:
    return Point(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        a, b = point(*self.a), point(*self.b)
        if a == b:
            raise ValueError("zero-length segment")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def points(self) -> tuple:
        return (self.a, self.b)

    def links(self):
        return [(self.a, self.b)]


@dataclass(frozen=True)
class PolyCurve:
    points: tuple

    def __post_init__(self):
        pts = tuple(point(*p) for p in self.points)
        if len(pts) < 2:
            raise ValueError("a curve needs at least two points")
        for p, q in zip(pts, pts[1:]):
            if p == q:
                raise ValueError("consecutive curve points coincide")
        object.__setattr__(self, "points", pts)

    @property
    def bends(self) -> int:
        return len(self.points) - 2

    def links(self):
        return list(zip(self.points, self.points[1:]))


GeomObject = Union[Segment, PolyCurve]


def orient(a, b, c) -> int:
    """Sign of the cross product (b - a) x (c - a)."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_box(a, b, c) -> bool:
    # c is collinear with a-b; is it inside their bounding box?
    return (min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))


def _links_meet(a, b, c, d) -> bool:
    if (max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0])
            or max(a[1], b[1]) < min(c[1], d[1]) or max(c[1], d[1]) < min(a[1], b[1])):
        return False
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_box(a, b, c):
        return True
    if o2 == 0 and _on_box(a, b, d):
        return True
    if o3 == 0 and _on_box(c, d, a):
        return True
    if o4 == 0 and _on_box(c, d, b):
        return True
    return False


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    return _links_meet(s1.a, s1.b, s2.a, s2.b)


def curves_intersect(c1: GeomObject, c2: GeomObject) -> bool:
    return any(_links_meet(a, b, c, d) for a, b in c1.links() for c, d in c2.links())


def objects_intersect(o1: GeomObject, o2: GeomObject) -> bool:
    return curves_intersect(o1, o2)


@dataclass
class GeomInstance:
    """Ordered objects with optional color lists and provenance labels."""
    objects: dict = field(default_factory=dict)
    lists: dict = field(default_factory=dict)
    labels: dict = field(default_factory=dict)

    def add(self, oid: str, obj: GeomObject, colors: Iterable[int] | None = None,
            label: str | None = None) -> None:
        if oid in self.objects:
            raise ValueError(f"duplicate object id {oid!r}")
        if not oid or any(ch.isspace() for ch in oid):
            raise ValueError(f"bad object id {oid!r}")
        self.objects[oid] = obj
        if colors is not None:
            self.lists[oid] = frozenset(colors)
        if label is not None:
            self.labels[oid] = label

    def add_segment(self, oid, p, q, colors=None, label=None) -> None:
        self.add(oid, Segment(point(*p), point(*q)), colors, label)

    def add_curve(self, oid, pts, colors=None, label=None) -> None:
        self.add(oid, PolyCurve(tuple(pts)), colors, label)

    @property
    def ids(self) -> list:
        return list(self.objects)

    def __len__(self) -> int:
        return len(self.objects)

    @property
    def geom_vertex_count(self) -> int:
        return sum(len(o.points) for o in self.objects.values())

    def without(self, oid: str) -> "GeomInstance":
        out = GeomInstance()
        for k, o in self.objects.items():
            if k != oid:
                out.add(k, o, self.lists.get(k), self.labels.get(k))
        return out


def _scaled_links(objs: list) -> list:
    """Each object's links with coordinates scaled to integers."""
    scale = 1
    for o in objs:
        for p in o.points:
            scale = lcm(scale, p.x.denominator, p.y.denominator)
    out = []
    for o in objs:
        pts = [(int(p.x * scale), int(p.y * scale)) for p in o.points]
        out.append(list(zip(pts, pts[1:])))
    return out


def _box(links):
    xs = [c for a, b in links for c in (a[0], b[0])]
    ys = [c for a, b in links for c in (a[1], b[1])]
    return min(xs), max(xs), min(ys), max(ys)


def intersecting_pairs(objs: list) -> list:
    """All index pairs (i, j), i < j, of intersecting objects, sorted."""
    links = _scaled_links(objs)
    boxes = [_box(ls) for ls in links]
    order = sorted(range(len(objs)), key=lambda i: boxes[i][0])
    pairs = []
    for pos, i in enumerate(order):
        x0, x1, y0, y1 = boxes[i]
        for j in order[pos + 1:]:
            bx0, bx1, by0, by1 = boxes[j]
            if bx0 > x1:
                break
            if by0 > y1 or by1 < y0:
                continue
            if _any_links_meet(links[i], links[j]):
                pairs.append((min(i, j), max(i, j)))
    pairs.sort()
    return pairs


def _any_links_meet(la, lb) -> bool:
    for a, b in la:
        ax0, ax1 = (a[0], b[0]) if a[0] <= b[0] else (b[0], a[0])
        ay0, ay1 = (a[1], b[1]) if a[1] <= b[1] else (b[1], a[1])
        for c, d in lb:
            if max(c[0], d[0]) < ax0 or min(c[0], d[0]) > ax1:
                continue
            if max(c[1], d[1]) < ay0 or min(c[1], d[1]) > ay1:
                continue
            if _links_meet(a, b, c, d):
                return True
    return False


def build_intersection_graph(inst: GeomInstance) -> Graph:
    if not inst.objects:
        raise ValueError("instance has no objects")
    ids = inst.ids
    objs = [inst.objects[k] for k in ids]
    return Graph(len(ids), intersecting_pairs(objs), ids=ids)


@dataclass(frozen=True)
class InstanceStats:
    n: int
    direction_count: int | None
    is_unit: bool | None
    is_pure_2dir: bool | None
    geom_vertex_count: int


def _direction(s: Segment):
    dx, dy = s.b.x - s.a.x, s.b.y - s.a.y
    return "vertical" if dx == 0 else dy / dx


def instance_stats(inst: GeomInstance) -> InstanceStats:
    objs = list(inst.objects.values())
    gv = inst.geom_vertex_count
    if not objs or not all(isinstance(o, Segment) for o in objs):
        return InstanceStats(len(objs), None, None, None, gv)
    dirs = [_direction(s) for s in objs]
    lengths = {(s.b.x - s.a.x) ** 2 + (s.b.y - s.a.y) ** 2 for s in objs}
    pure = len(set(dirs)) == 2
    if pure:
        by_dir: dict = {}
        for idx, d in enumerate(dirs):
            by_dir.setdefault(d, []).append(objs[idx])
        for group in by_dir.values():
            if intersecting_pairs(group):
                pure = False
                break
    return InstanceStats(len(objs), len(set(dirs)), len(lengths) == 1, pure, gv)


# ---------------------------------------------------------------- file format

def parse_instance(text: str) -> GeomInstance:
    inst = GeomInstance()
    pending_lists = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        try:
            if kind == "segment":
                if len(tok) != 6:
                    raise ValueError("segment needs an id and four coordinates")
                c = [parse_rational(t) for t in tok[2:]]
                inst.add_segment(tok[1], (c[0], c[1]), (c[2], c[3]))
            elif kind == "curve":
                c = [parse_rational(t) for t in tok[2:]]
                if len(c) < 4 or len(c) % 2:
                    raise ValueError("curve needs an even number (>= 4) of coordinates")
                inst.add_curve(tok[1], list(zip(c[0::2], c[1::2])))
            elif kind == "list":
                if len(tok) != 3:
                    raise ValueError("list needs an id and comma-separated colors")
                colors = frozenset(int(t) for t in tok[2].split(",") if t)
                if not colors:
                    raise ValueError("empty color list")
                pending_lists.append((lineno, tok[1], colors))
            else:
                raise ValueError(f"unknown record {kind!r}")
        except InstanceParseError:
            raise
        except (ValueError, ZeroDivisionError) as exc:
            raise InstanceParseError(lineno, str(exc)) from None
    for lineno, oid, colors in pending_lists:
        if oid not in inst.objects:
            raise InstanceParseError(lineno, f"list for unknown object {oid!r}")
        inst.lists[oid] = colors
    return inst


def format_instance(inst: GeomInstance) -> str:
    out = []
    for oid, o in inst.objects.items():
        coords = " ".join(format_rational(c) for p in o.points for c in p)
        kind = "segment" if isinstance(o, Segment) else "curve"
        out.append(f"{kind} {oid} {coords}")
    for oid in inst.objects:
        if oid in inst.lists:
            out.append(f"list {oid} " + ",".join(str(c) for c in sorted(inst.lists[oid])))
    return "\n".join(out) + "\n"
