"""The two-semicircle drawing of the complete graph with collinear blockers.

Vertex i sits at (i, 0). The edge between i < j is drawn as the upper
semicircle from (i, 0) to (-i-j, 0) followed by the lower semicircle from
(-i-j, 0) to (j, 0), so the whole curve meets the x-axis exactly at its two
endpoints and the pivot (-i-j, 0). The pivots range over [-(2n-1), -3], which
is why the 2n-3 points (-k, 0), k in [3, 2n-1], block every edge.

All intersection counting is exact: circles here have rational centers and
radii, and common points are identified by the tag (x, sign(y), y^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import GeometryError
from .geometry import Point


@dataclass(frozen=True)
class Arc:
    """Semicircle with center on the x-axis; half = +1 keeps y >= 0, -1 keeps y <= 0."""

    center_x: Fraction
    radius: Fraction
    half: int

    def contains(self, p: Point) -> bool:
        if (p.x - self.center_x) ** 2 + p.y ** 2 != self.radius ** 2:
            return False
        return p.y >= 0 if self.half > 0 else p.y <= 0

    def to_obj(self) -> dict:
        r2 = self.radius ** 2
        return {
            "center": [f"{self.center_x.numerator}/{self.center_x.denominator}", "0/1"],
            "radius_squared": f"{r2.numerator}/{r2.denominator}",
            "half": "upper" if self.half > 0 else "lower",
        }


@dataclass(frozen=True)
class ArcEdge:
    i: int
    j: int
    upper: Arc
    lower: Arc

    @property
    def pivot(self) -> Point:
        return Point(-(self.i + self.j), 0)

    def contains(self, p: Point) -> bool:
        return self.upper.contains(p) or self.lower.contains(p)

    def to_obj(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "pivot": self.pivot.to_obj(),
            "arcs": [self.upper.to_obj(), self.lower.to_obj()],
        }


@dataclass(frozen=True)
class ArcDrawing:
    n: int
    vertices: tuple[Point, ...]
    edges: tuple[ArcEdge, ...]
    blockers: tuple[Point, ...]

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "vertices": [p.to_obj() for p in self.vertices],
            "edges": [e.to_obj() for e in self.edges],
            "blockers": [p.to_obj() for p in self.blockers],
        }


def construct_kn_arc_drawing(n: int) -> ArcDrawing:
    if n < 2:
        raise GeometryError("arc drawing needs n >= 2")
    vertices = tuple(Point(i, 0) for i in range(1, n + 1))
    edges = []
    for i, j in combinations(range(1, n + 1), 2):
        if not 3 <= i + j <= 2 * n - 1:
            raise GeometryError(f"pivot sum {i + j} out of range for n={n}")
        upper = Arc(Fraction(-j, 2), Fraction(2 * i + j, 2), +1)
        lower = Arc(Fraction(-i, 2), Fraction(i + 2 * j, 2), -1)
        edges.append(ArcEdge(i, j, upper, lower))
    blockers = tuple(Point(-k, 0) for k in range(3, 2 * n))
    return ArcDrawing(n, vertices, tuple(edges), blockers)


def _arc_common_points(a1: Arc, a2: Arc) -> set[tuple]:
    """Common points of two semicircles, as exact tags (x, sign(y), y^2)."""
    c1, r1 = a1.center_x, a1.radius
    c2, r2 = a2.center_x, a2.radius
    if c1 == c2:
        if r1 == r2:
            raise GeometryError("two edge arcs share a full circle; the realization is broken")
        return set()
    x0 = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1))
    d = r1 * r1 - (x0 - c1) ** 2
    if d < 0:
        return set()
    if d == 0:
        return {(x0, 0, Fraction(0))}  # touch on the axis
    if a1.half == a2.half:
        return {(x0, a1.half, d)}
    return set()


def edge_common_points(e1: ArcEdge, e2: ArcEdge) -> set[tuple]:
    out: set[tuple] = set()
    for a1 in (e1.upper, e1.lower):
        for a2 in (e2.upper, e2.lower):
            out |= _arc_common_points(a1, a2)
    return out


@dataclass(frozen=True)
class DrawingBlockCheck:
    ok: bool
    failures: tuple[str, ...]

    def to_obj(self) -> dict:
        return {"ok": self.ok, "failures": list(self.failures)}


def verify_drawing_blocking(d: ArcDrawing) -> DrawingBlockCheck:
    """Each edge must contain exactly its pivot blocker, no other blocker,
    and no vertex other than its own endpoints; blockers avoid vertices."""
    failures = []
    vset = set(d.vertices)
    for b in d.blockers:
        if b in vset:
            failures.append(f"blocker {b.to_obj()} coincides with a vertex")
    bset = set(d.blockers)
    for e in d.edges:
        hits = [b for b in d.blockers if e.contains(b)]
        if e.pivot not in bset:
            failures.append(f"edge ({e.i},{e.j}) has pivot outside the blocker set")
        if set(hits) != {e.pivot}:
            failures.append(
                f"edge ({e.i},{e.j}) meets blockers {[b.to_obj() for b in hits]}, "
                f"expected exactly its pivot {e.pivot.to_obj()}"
            )
        for v in d.vertices:
            if v in (Point(e.i, 0), Point(e.j, 0)):
                continue
            if e.contains(v):
                failures.append(f"edge ({e.i},{e.j}) passes through vertex {v.to_obj()}")
    return DrawingBlockCheck(not failures, tuple(failures))


@dataclass(frozen=True)
class SimplicityReport:
    ok: bool
    max_pairwise_intersections: int
    violating_pairs: tuple[tuple[tuple[int, int], tuple[int, int], int], ...]

    def to_obj(self) -> dict:
        return {
            "ok": self.ok,
            "max_pairwise_intersections": self.max_pairwise_intersections,
            "violating_pairs": [
                {"edges": [list(a), list(b)], "count": c} for a, b, c in self.violating_pairs
            ],
        }


def verify_simplicity(d: ArcDrawing) -> SimplicityReport:
    """Exact census of pairwise edge-curve intersections.

    Shared endpoints count, so a clean drawing shows at most one common
    point for every pair of edges."""
    worst = 0
    bad = []
    for e1, e2 in combinations(d.edges, 2):
        count = len(edge_common_points(e1, e2))
        if count > worst:
            worst = count
        if count > 1:
            bad.append(((e1.i, e1.j), (e2.i, e2.j), count))
    return SimplicityReport(not bad, worst, tuple(bad))


def verified_arc_drawing(n: int) -> ArcDrawing:
    """Construct and fully verify; any violation raises instead of passing
    a broken drawing along."""
    d = construct_kn_arc_drawing(n)
    blocking = verify_drawing_blocking(d)
    if not blocking.ok:
        raise GeometryError(f"arc drawing n={n} failed blocking: {blocking.failures}")
    simplicity = verify_simplicity(d)
    if not simplicity.ok:
        raise GeometryError(
            f"arc drawing n={n} is not simple: {simplicity.violating_pairs}; "
            "no alternative realization is wired in, this needs attention"
        )
    return d


@dataclass(frozen=True)
class TrivialBound:
    linear_bound: int  # n - 1
    exact_ceiling: int  # ceil(C(n,2) / floor(n/2))


def trivial_blocker_lower_bound(n: int) -> TrivialBound:
    """A point blocks at most floor(n/2) edges of a drawing on n vertices,
    so C(n,2)/floor(n/2) blockers are needed; n - 1 is the weaker round
    number usually quoted."""
    if n < 2:
        raise GeometryError("need n >= 2")
    pairs = n * (n - 1) // 2
    ceiling = -(-pairs // (n // 2))
    return TrivialBound(n - 1, ceiling)


def edge_polyline(e: ArcEdge, samples_per_arc: int = 32) -> list[tuple[float, float]]:
    """Float sample points along the edge curve, for external plotting only."""
    if samples_per_arc < 2:
        raise GeometryError("need at least 2 samples per arc")
    pts: list[tuple[float, float]] = []
    cu, ru = float(e.upper.center_x), float(e.upper.radius)
    for k in range(samples_per_arc + 1):
        th = math.pi * k / samples_per_arc
        pts.append((cu + ru * math.cos(th), ru * math.sin(th)))
    cl, rl = float(e.lower.center_x), float(e.lower.radius)
    for k in range(1, samples_per_arc + 1):
        th = math.pi + math.pi * k / samples_per_arc
        pts.append((cl + rl * math.cos(th), rl * math.sin(th)))
    return pts
