"""Blocking sets: verification, exact minima via hitting-set search, lower
bounds, and the blocked complete-bipartite constructions."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from .errors import GeometryError, NotGeneralPosition, SegmentOverlap
from .geometry import (
    Point,
    PointSet,
    convex_hull_size,
    is_general_position,
    max_collinear,
    midpoint,
    on_open_segment,
    segment_intersection,
    sorted_along_line,
)


@dataclass(frozen=True)
class Candidate:
    point: Point
    covers: frozenset[int]


@dataclass(frozen=True)
class BlockingInstance:
    """Hitting-set universe: open segments plus candidate blocker points.

    Each candidate's cover set is exact: it lists precisely the segments
    whose open interior contains the candidate. No candidate coincides with
    an instance vertex.
    """

    segments: tuple[tuple[Point, Point], ...]
    vertices: tuple[Point, ...]
    candidates: tuple[Candidate, ...]
    origin: str  # "all-pairs" | "drawing-edges"
    pair_labels: Optional[tuple[tuple[int, int], ...]] = None
    notes: tuple[str, ...] = ()

    @property
    def m(self) -> int:
        return len(self.segments)


def _private_params():
    # deterministic schedule of interior parameters: midpoint first, then
    # proper fractions by growing denominator
    yield Fraction(1, 2)
    den = 3
    while True:
        for num in range(1, den):
            if gcd(num, den) == 1:
                yield Fraction(num, den)
        den += 1


def _point_at(a: Point, b: Point, t: Fraction) -> Point:
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def _build_instance(
    segments: Sequence[tuple[Point, Point]],
    vertices: Sequence[Point],
    origin: str,
    pair_labels: Optional[tuple[tuple[int, int], ...]],
    gap_segments: Sequence[int],
    notes: tuple[str, ...],
) -> BlockingInstance:
    """Shared candidate construction.

    gap_segments lists the segment indices that need a schedule-placed
    candidate of their own (gaps of multi-point lines, private positions of
    drawing edges). Pairwise intersection points contribute the rest.
    """
    segs = list(segments)
    if len({(a, b) for a, b in segs}) != len(segs):
        raise GeometryError("instance segments must be pairwise distinct")
    vset = set(vertices)
    forbidden: set[Point] = set(vset)
    meet_candidates: set[Point] = set()
    for i, j in combinations(range(len(segs)), 2):
        m = segment_intersection(*segs[i], *segs[j])
        if m.kind == "overlap":
            if origin == "drawing-edges":
                raise SegmentOverlap(
                    f"segments {i} and {j} overlap along a line; "
                    "blocked drawings must have interior-disjoint collinear edges"
                )
            continue  # same-line pairs of an all-pairs instance; gaps handle them
        if m.kind == "point":
            forbidden.add(m.point)
            if m.point not in vset:
                meet_candidates.add(m.point)
    placed: set[Point] = set()
    for s in gap_segments:
        a, b = segs[s]
        for t in _private_params():
            p = _point_at(a, b, t)
            if p not in forbidden and p not in placed:
                placed.add(p)
                break
    points = sorted(meet_candidates | placed)
    cands = []
    for p in points:
        covers = frozenset(
            s for s, (a, b) in enumerate(segs) if on_open_segment(p, a, b)
        )
        if covers:
            cands.append(Candidate(p, covers))
    return BlockingInstance(
        tuple(segs), tuple(vertices), tuple(cands), origin, pair_labels, notes
    )


def all_pairs_instance(ps: PointSet) -> BlockingInstance:
    """Hitting-set instance over every pair of the set, collinear pairs
    included: blockers must come from outside the set, so a pair whose
    segment already holds other set points still needs covering."""
    n = len(ps)
    if n < 2:
        raise GeometryError("need at least 2 points")
    labels = tuple((i, j) for i, j in combinations(range(n), 2))
    seg_index = {lab: k for k, lab in enumerate(labels)}
    segments = [(ps[i], ps[j]) for i, j in labels]
    gap_segments = []
    for rec in ps.lines:
        order = sorted_along_line(ps, rec)
        for a, b in zip(order, order[1:]):
            gap_segments.append(seg_index[(a, b) if a < b else (b, a)])
    notes = ()
    if not is_general_position(ps):
        notes = ("collinear pairs kept as segments; blockers are outside the set",)
    return _build_instance(segments, list(ps), "all-pairs", labels, gap_segments, notes)


def drawing_instance(
    edges: Sequence[tuple[Point, Point]], vertices: Optional[Sequence[Point]] = None
) -> BlockingInstance:
    edges = list(edges)
    if vertices is None:
        seen = []
        for a, b in edges:
            for p in (a, b):
                if p not in seen:
                    seen.append(p)
        vertices = seen
    return _build_instance(
        edges, list(vertices), "drawing-edges", None, list(range(len(edges))), ()
    )


def candidate_blockers(
    source: Union[PointSet, BlockingInstance, Sequence[tuple[Point, Point]]],
) -> BlockingInstance:
    if isinstance(source, BlockingInstance):
        return source
    if isinstance(source, PointSet):
        return all_pairs_instance(source)
    return drawing_instance(source)


@dataclass(frozen=True)
class BlockingSet:
    points: tuple[Point, ...]
    covers: tuple[tuple[int, int], ...]  # (segment index, blocker index)
    optimal: bool
    lower_bound: int
    notes: tuple[str, ...] = ()

    @property
    def size(self) -> int:
        return len(self.points)

    def to_obj(self) -> dict:
        return {
            "size": self.size,
            "optimal": self.optimal,
            "lower_bound": self.lower_bound,
            "blockers": [p.to_obj() for p in self.points],
            "covers": [list(c) for c in self.covers],
        }


@dataclass(frozen=True)
class BlockCheck:
    ok: bool
    uncovered: Optional[tuple[int, int]] = None
    vertex_clash: Optional[Point] = None

    def to_obj(self) -> dict:
        return {
            "ok": self.ok,
            "uncovered": list(self.uncovered) if self.uncovered else None,
            "vertex_clash": self.vertex_clash.to_obj() if self.vertex_clash else None,
        }


def is_blocking_set(ps: PointSet, blockers: Iterable[Point]) -> BlockCheck:
    """Certificate check: blockers avoid the set and cover every pair."""
    bl = list(blockers)
    members = set(ps)
    for b in bl:
        if b in members:
            return BlockCheck(False, vertex_clash=b)
    for i, j in combinations(range(len(ps)), 2):
        if not any(on_open_segment(b, ps[i], ps[j]) for b in bl):
            return BlockCheck(False, uncovered=(i, j))
    return BlockCheck(True)


def blocks_drawing(
    vertices: Sequence[Point],
    edges: Sequence[tuple[Point, Point]],
    blockers: Iterable[Point],
) -> BlockCheck:
    """Same certificate for an explicit edge list; uncovered is an edge index."""
    bl = list(blockers)
    vset = set(vertices)
    for b in bl:
        if b in vset:
            return BlockCheck(False, vertex_clash=b)
    for k, (a, c) in enumerate(edges):
        if not any(on_open_segment(b, a, c) for b in bl):
            return BlockCheck(False, uncovered=(k, k))
    return BlockCheck(True)


def _solve_hitting_set(
    cover_masks: Sequence[int], m: int, deadline: Optional[float]
) -> tuple[list[int], bool, int]:
    all_mask = (1 << m) - 1
    union = 0
    for cm in cover_masks:
        union |= cm
    if union != all_mask:
        missing = [s for s in range(m) if not (union >> s) & 1]
        raise GeometryError(f"segments {missing} have no candidate blocker")
    seg_cands = [
        [c for c, cm in enumerate(cover_masks) if (cm >> s) & 1] for s in range(m)
    ]
    cand_union = [0] * m
    for s in range(m):
        acc = 0
        for c in seg_cands[s]:
            acc |= 1 << c
        cand_union[s] = acc
    lb_order = sorted(range(m), key=lambda s: (len(seg_cands[s]), s))

    def lower_bound(uncov: int) -> int:
        # segments with pairwise disjoint candidate pools need distinct blockers
        used = 0
        lb = 0
        for s in lb_order:
            if (uncov >> s) & 1 and not cand_union[s] & used:
                lb += 1
                used |= cand_union[s]
        return lb

    # greedy incumbent: most new coverage, lowest index on ties
    uncov = all_mask
    greedy: list[int] = []
    while uncov:
        best_c = max(
            range(len(cover_masks)),
            key=lambda c: (bin(cover_masks[c] & uncov).count("1"), -c),
        )
        greedy.append(best_c)
        uncov &= ~cover_masks[best_c]
    best = greedy
    best_size = len(greedy)
    aborted = False
    frontier_min: Optional[int] = None
    chosen: list[int] = []

    def rec(uncov: int) -> None:
        nonlocal best, best_size, aborted, frontier_min
        if uncov == 0:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best = chosen.copy()
            return
        lb = lower_bound(uncov)
        if len(chosen) + lb >= best_size:
            return
        if deadline is not None and time.monotonic() > deadline:
            aborted = True
            bound = len(chosen) + lb
            frontier_min = bound if frontier_min is None else min(frontier_min, bound)
            return
        s = min(
            (s for s in range(m) if (uncov >> s) & 1),
            key=lambda s: (len(seg_cands[s]), s),
        )
        for c in seg_cands[s]:
            chosen.append(c)
            rec(uncov & ~cover_masks[c])
            chosen.pop()

    rec(all_mask)
    if aborted:
        lower = min(frontier_min, best_size) if frontier_min is not None else best_size
        return best, False, lower
    return best, True, best_size


def min_blocking_set(
    source: Union[PointSet, BlockingInstance, Sequence[tuple[Point, Point]]],
    budget_ms: Optional[int] = None,
) -> BlockingSet:
    """Minimum hitting set over the candidate space, branch and bound.

    Budget exhaustion returns the best feasible set found with optimal=False
    and the best proven lower bound.
    """
    inst = candidate_blockers(source)
    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
    cover_masks = [
        sum(1 << s for s in cand.covers) for cand in inst.candidates
    ]
    chosen, optimal, lower = _solve_hitting_set(cover_masks, inst.m, deadline)
    chosen_sorted = sorted(set(chosen))
    points = tuple(inst.candidates[c].point for c in chosen_sorted)
    covers = []
    for s in range(inst.m):
        for bi, c in enumerate(chosen_sorted):
            if s in inst.candidates[c].covers:
                covers.append((s, bi))
                break
    return BlockingSet(points, tuple(covers), optimal, lower, inst.notes)


def triangulation_lower_bound(ps: PointSet) -> int:
    """Edge count of any triangulation: 3n - 3 - t with t hull points; every
    edge needs its own blocker, so this bounds the blocking number below."""
    n = len(ps)
    if n < 3:
        raise GeometryError("lower bound needs at least 3 points")
    if not is_general_position(ps):
        raise NotGeneralPosition("triangulation bound assumes no 3 collinear points")
    return 3 * n - 3 - convex_hull_size(ps)


def hull_free_lower_bound(n: int) -> int:
    """The hull-free corollary of the triangulation bound."""
    return 2 * n - 3


def midpoint_blocking_set(ps: PointSet) -> BlockingSet:
    """All pairwise midpoints; a valid blocking set in general position."""
    if not is_general_position(ps):
        raise NotGeneralPosition("midpoints can collide with the set when 3 points are collinear")
    labels = list(combinations(range(len(ps)), 2))
    mids = sorted({midpoint(ps[i], ps[j]) for i, j in labels})
    index = {p: k for k, p in enumerate(mids)}
    covers = tuple((s, index[midpoint(ps[i], ps[j])]) for s, (i, j) in enumerate(labels))
    return BlockingSet(tuple(mids), covers, False, 0, ("midpoint construction",))


@dataclass(frozen=True)
class BipartiteDrawing:
    """Straight-line K_{n,n} with its stated blocker list."""

    n: int
    left: tuple[Point, ...]
    right: tuple[Point, ...]
    edges: tuple[tuple[Point, Point], ...]
    blockers: tuple[Point, ...]
    name: str

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self.left + self.right

    def check(self) -> BlockCheck:
        return blocks_drawing(self.vertices, self.edges, self.blockers)

    def to_obj(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "left": [p.to_obj() for p in self.left],
            "right": [p.to_obj() for p in self.right],
            "edges": [[a.to_obj(), b.to_obj()] for a, b in self.edges],
            "blockers": [p.to_obj() for p in self.blockers],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "BipartiteDrawing":
        try:
            return cls(
                int(obj["n"]),
                tuple(Point.from_obj(p) for p in obj["left"]),
                tuple(Point.from_obj(p) for p in obj["right"]),
                tuple((Point.from_obj(a), Point.from_obj(b)) for a, b in obj["edges"]),
                tuple(Point.from_obj(p) for p in obj["blockers"]),
                str(obj.get("name", "")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise GeometryError(f"malformed drawing bundle: {exc}") from exc


def construct_knn_grid(n: int) -> BipartiteDrawing:
    """Two horizontal rows: left points at (2i, 0), right at (2j, 2); the
    2n - 1 points (k, 1) for k in [2, 2n] block everything, edge (i, j)
    through (i + j, 1)."""
    if n < 1:
        raise GeometryError("n must be at least 1")
    left = tuple(Point(2 * i, 0) for i in range(1, n + 1))
    right = tuple(Point(2 * j, 2) for j in range(1, n + 1))
    edges = tuple((v, w) for v in left for w in right)
    blockers = tuple(Point(k, 1) for k in range(2, 2 * n + 1))
    return BipartiteDrawing(n, left, right, edges, blockers, f"knn-grid-{n}")


def construct_knn_parabola(n: int) -> BipartiteDrawing:
    """Both sides on y = x^2: left at (-2^i, 2^(2i)), right at (2^j, 2^(2j));
    edge (i, j) crosses the y-axis at (0, 2^(i+j)), so the 2n - 1 points
    (0, 2^k), k in [2, 2n], block everything. Vertices are automatically in
    general position (a line meets a parabola at most twice)."""
    if n < 1:
        raise GeometryError("n must be at least 1")
    left = tuple(Point(-(2 ** i), 2 ** (2 * i)) for i in range(1, n + 1))
    right = tuple(Point(2 ** j, 2 ** (2 * j)) for j in range(1, n + 1))
    ps = PointSet(left + right, f"knn-parabola-{n}-vertices")
    if n >= 2 and not is_general_position(ps):
        raise GeometryError("parabola vertices unexpectedly collinear")
    edges = tuple((v, w) for v in left for w in right)
    blockers = tuple(Point(0, 2 ** k) for k in range(2, 2 * n + 1))
    return BipartiteDrawing(n, left, right, edges, blockers, f"knn-parabola-{n}")


def product_set_drawing(s_values: Sequence[int]) -> tuple[BipartiteDrawing, set[int]]:
    """K_{n,n} on the parabola with vertex scales S: edge (i, j) crosses the
    y-axis at height s_i * s_j, so the blocker heights form the product set
    S * S (squares included, since i = j edges exist)."""
    s = list(s_values)
    if len(set(s)) != len(s) or any(v <= 0 for v in s):
        raise GeometryError("S must be distinct positive integers")
    products = {a * b for a in s for b in s}
    left = tuple(Point(-v, v * v) for v in s)
    right = tuple(Point(v, v * v) for v in s)
    edges = tuple((v, w) for v in left for w in right)
    blockers = tuple(Point(0, p) for p in sorted(products))
    d = BipartiteDrawing(len(s), left, right, edges, blockers, f"product-set-{len(s)}")
    return d, products


@dataclass(frozen=True)
class SurveyRow:
    name: str
    n: int
    max_collinear: int
    b_size: int
    b_optimal: bool
    b_lower: int
    m: int

    def to_obj(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "max_collinear": self.max_collinear,
            "b_size": self.b_size,
            "b_optimal": self.b_optimal,
            "b_lower": self.b_lower,
            "m": self.m,
        }


@dataclass(frozen=True)
class SurveyResult:
    ell: int
    rows: tuple[SurveyRow, ...]
    # per n: smallest blocking number and midpoint count seen
    envelope: tuple[tuple[int, int, int], ...]

    def to_obj(self) -> dict:
        return {
            "ell": self.ell,
            "rows": [r.to_obj() for r in self.rows],
            "envelope": [list(e) for e in self.envelope],
        }


def bounded_collinearity_survey(
    point_sets: Iterable[PointSet], ell: int, budget_ms: Optional[int] = None
) -> SurveyResult:
    """Blocking and midpoint statistics over sets with max_collinear < ell.

    The envelope rows give, per n, the best (smallest) exact blocking number
    and midpoint count observed: empirical upper bounds for the
    line-bounded minima."""
    if ell < 3:
        raise GeometryError("ell must be at least 3")
    rows = []
    for ps in point_sets:
        mc = max_collinear(ps)
        if mc >= ell:
            continue
        bs = min_blocking_set(ps, budget_ms)
        mids = {midpoint(a, b) for a, b in combinations(list(ps), 2)}
        rows.append(
            SurveyRow(ps.name, len(ps), mc, bs.size, bs.optimal, bs.lower_bound, len(mids))
        )
    env: dict[int, tuple[int, int]] = {}
    for r in rows:
        if not r.b_optimal:
            continue
        cur = env.get(r.n)
        env[r.n] = (
            min(cur[0], r.b_size) if cur else r.b_size,
            min(cur[1], r.m) if cur else r.m,
        )
    envelope = tuple((n, b, m) for n, (b, m) in sorted(env.items()))
    return SurveyResult(ell, tuple(rows), envelope)
