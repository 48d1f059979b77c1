"""Exact rational plane geometry: points, point sets, line structure.

Everything in this module is tolerance-free. Coordinates are Fractions,
predicates reduce to integer sign computations, and equality means exact
value equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from .errors import DegenerateHull, DegenerateSegment, GeometryError

Rational = Union[int, str, Fraction]


def _frac(v: Rational) -> Fraction:
    try:
        return Fraction(v)
    except ZeroDivisionError:
        raise GeometryError(f"zero denominator in coordinate {v!r}") from None
    except (ValueError, TypeError):
        raise GeometryError(f"bad rational literal {v!r}") from None


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True, order=True)
class Point:
    """A plane point with exact rational coordinates.

    Fraction keeps numerator/denominator coprime with positive denominator,
    so equality and hashing are exact value identity.
    """

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, f: Rational) -> "Point":
        f = Fraction(f)
        return Point(self.x * f, self.y * f)

    def to_obj(self) -> list:
        return [_frac_str(self.x), _frac_str(self.y)]

    @classmethod
    def from_obj(cls, obj) -> "Point":
        if not isinstance(obj, (list, tuple)) or len(obj) != 2:
            raise GeometryError(f"point must be a 2-element list, got {obj!r}")
        return cls(_frac(obj[0]), _frac(obj[1]))


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the determinant of (q-p, r-p): +1 ccw, -1 cw, 0 collinear."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (d > 0) - (d < 0)


def collinear(p: Point, q: Point, r: Point) -> bool:
    return orientation(p, q, r) == 0


def on_open_segment(x: Point, a: Point, b: Point) -> bool:
    """True iff x lies strictly between a and b on the segment (endpoints out)."""
    if a == b:
        raise DegenerateSegment(f"segment endpoints coincide at {a}")
    if x == a or x == b or orientation(a, b, x) != 0:
        return False
    if a.x != b.x:
        lo, hi = (a.x, b.x) if a.x < b.x else (b.x, a.x)
        return lo < x.x < hi
    lo, hi = (a.y, b.y) if a.y < b.y else (b.y, a.y)
    return lo < x.y < hi


@dataclass(frozen=True)
class SegmentMeet:
    """Intersection outcome of two segments: kind in {empty, point, overlap}.

    kind == "point" carries the meeting point; it is interior to at least one
    of the two segments. A touch of two endpoints counts as empty, and two
    collinear segments sharing a whole open subsegment count as overlap.
    """

    kind: str
    point: Optional[Point] = None

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"


_EMPTY = SegmentMeet("empty")
_OVERLAP = SegmentMeet("overlap")


def _cross(ax: Fraction, ay: Fraction, bx: Fraction, by: Fraction) -> Fraction:
    return ax * by - ay * bx


def segment_intersection(a1: Point, b1: Point, a2: Point, b2: Point) -> SegmentMeet:
    if a1 == b1 or a2 == b2:
        raise DegenerateSegment("degenerate segment in intersection query")
    d1x, d1y = b1.x - a1.x, b1.y - a1.y
    d2x, d2y = b2.x - a2.x, b2.y - a2.y
    wx, wy = a2.x - a1.x, a2.y - a1.y
    denom = _cross(d1x, d1y, d2x, d2y)
    if denom == 0:
        if _cross(wx, wy, d1x, d1y) != 0:
            return _EMPTY  # parallel, different lines
        # collinear: compare parameter intervals along segment 1
        dd = d1x * d1x + d1y * d1y
        ta = ((a2.x - a1.x) * d1x + (a2.y - a1.y) * d1y) / dd
        tb = ((b2.x - a1.x) * d1x + (b2.y - a1.y) * d1y) / dd
        lo2, hi2 = (ta, tb) if ta <= tb else (tb, ta)
        if min(Fraction(1), hi2) > max(Fraction(0), lo2):
            return _OVERLAP
        return _EMPTY  # disjoint, or endpoint-to-endpoint touch
    t = _cross(wx, wy, d2x, d2y) / denom
    s = _cross(wx, wy, d1x, d1y) / denom
    if not (0 <= t <= 1 and 0 <= s <= 1):
        return _EMPTY
    interior1 = 0 < t < 1
    interior2 = 0 < s < 1
    if not (interior1 or interior2):
        return _EMPTY  # the segments just touch endpoint to endpoint
    return SegmentMeet("point", Point(a1.x + t * d1x, a1.y + t * d1y))


def _primitive(dx: Fraction, dy: Fraction) -> tuple[int, int]:
    # scale a nonzero rational vector to a primitive integer vector, sign-fixed
    den = dx.denominator * dy.denominator // gcd(dx.denominator, dy.denominator)
    xi = int(dx * den)
    yi = int(dy * den)
    g = gcd(abs(xi), abs(yi))
    xi //= g
    yi //= g
    if xi < 0 or (xi == 0 and yi < 0):
        xi, yi = -xi, -yi
    return xi, yi


def _line_key(p: Point, q: Point) -> tuple[int, int, Fraction]:
    # canonical (A, B, C) with A*x + B*y = C and (A, B) primitive integer
    a, b = _primitive(q.y - p.y, p.x - q.x)
    return (a, b, a * p.x + b * p.y)


@dataclass(frozen=True)
class LineRecord:
    """A maximal collinear subset of a point set, by index.

    member_indices is sorted by index; direction is a primitive integer
    vector along the line; anchor is the lowest-index member.
    """

    member_indices: tuple[int, ...]
    direction: tuple[int, int]
    anchor: Point

    def __len__(self) -> int:
        return len(self.member_indices)


@dataclass(frozen=True)
class PointSet:
    """Ordered duplicate-free list of points; index i names a point for good."""

    points: tuple[Point, ...]
    name: str = ""

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        seen = set()
        for p in pts:
            if not isinstance(p, Point):
                raise GeometryError(f"PointSet entries must be Points, got {p!r}")
            if p in seen:
                raise GeometryError(f"duplicate point {p.to_obj()} in set {self.name!r}")
            seen.add(p)

    @classmethod
    def build(cls, coords: Iterable[tuple[Rational, Rational]], name: str = "") -> "PointSet":
        return cls(tuple(Point(x, y) for x, y in coords), name)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    @cached_property
    def lines(self) -> tuple[LineRecord, ...]:
        return lines_of(self)

    def to_obj(self) -> dict:
        return {"name": self.name, "points": [p.to_obj() for p in self.points]}

    @classmethod
    def from_obj(cls, obj) -> "PointSet":
        if not isinstance(obj, dict) or "points" not in obj:
            raise GeometryError("point set object needs a 'points' field")
        name = obj.get("name", "")
        if not isinstance(name, str):
            raise GeometryError("point set 'name' must be a string")
        pts = obj["points"]
        if not isinstance(pts, list):
            raise GeometryError("'points' must be a list")
        return cls(tuple(Point.from_obj(p) for p in pts), name)

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PointSet":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise GeometryError(f"bad point set JSON: {e}") from None
        return cls.from_obj(obj)


def lines_of(ps: PointSet | Sequence[Point]) -> tuple[LineRecord, ...]:
    """All maximal collinear subsets of size >= 2, one record per line.

    Records are ordered by their member index tuples, so the line through
    the smallest indices comes first.
    """
    pts = list(ps)
    if len(pts) < 2:
        raise GeometryError("need at least 2 points for line structure")
    groups: dict[tuple, set[int]] = {}
    for i, j in combinations(range(len(pts)), 2):
        groups.setdefault(_line_key(pts[i], pts[j]), set()).update((i, j))
    records = []
    for members in groups.values():
        idx = tuple(sorted(members))
        p, q = pts[idx[0]], pts[idx[1]]
        records.append(LineRecord(idx, _primitive(q.x - p.x, q.y - p.y), pts[idx[0]]))
    records.sort(key=lambda r: r.member_indices)
    return tuple(records)


def sorted_along_line(ps: PointSet | Sequence[Point], rec: LineRecord) -> list[int]:
    """Member indices of rec reordered by position along the line."""
    pts = list(ps)
    dx, dy = rec.direction
    return sorted(rec.member_indices, key=lambda i: pts[i].x * dx + pts[i].y * dy)


def max_collinear(ps: PointSet | Sequence[Point]) -> int:
    recs = ps.lines if isinstance(ps, PointSet) else lines_of(ps)
    return max(len(r) for r in recs)


def is_general_position(ps: PointSet | Sequence[Point]) -> bool:
    return max_collinear(ps) <= 2


def _hull_vertices(pts: Sequence[Point]) -> list[Point]:
    # monotone chain, strict turns only: corners of the hull, ccw
    srt = sorted(set(pts), key=lambda p: (p.x, p.y))
    if len(srt) < 3:
        return srt
    lower: list[Point] = []
    for p in srt:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(srt):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def convex_hull_size(ps: PointSet | Sequence[Point]) -> int:
    """Number of points on the convex hull boundary.

    Points interior to hull edges count too; only points strictly inside
    the hull are excluded. Needs at least 3 points not all on one line.
    """
    pts = list(ps)
    if len(pts) < 3:
        raise DegenerateHull("hull needs at least 3 points")
    if max_collinear(ps) == len(pts):
        raise DegenerateHull("all points collinear, hull is degenerate")
    hull = _hull_vertices(pts)
    k = len(hull)
    on_boundary = 0
    for p in pts:
        if all(orientation(hull[i], hull[(i + 1) % k], p) > 0 for i in range(k)):
            continue  # strictly inside
        on_boundary += 1
    return on_boundary
