"""Visibility graphs of point sets and the graph checks that run on them."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import ceil
from typing import Optional

from . import cliques
from .errors import DisconnectedVisibility, GeometryError
from .geometry import (
    LineRecord,
    Point,
    PointSet,
    max_collinear,
    on_open_segment,
    sorted_along_line,
)


@dataclass(frozen=True)
class VisibilityGraph:
    """Graph on point indices; edge iff the open segment is clear of the set.

    adj[i] is the neighbour bitmask of vertex i. Irreflexive and symmetric by
    construction.
    """

    adj: tuple[int, ...]
    source: PointSet

    def __post_init__(self):
        n = len(self.adj)
        for i, mask in enumerate(self.adj):
            if (mask >> i) & 1:
                raise GeometryError(f"self-loop at vertex {i}")
            if mask >> n:
                raise GeometryError(f"adjacency mask of {i} out of range")

    @property
    def n(self) -> int:
        return len(self.adj)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in combinations(range(self.n), 2) if self.has_edge(i, j)]

    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def to_obj(self) -> dict:
        return {"n": self.n, "edges": self.edges(), "source": self.source.to_obj()}


def visibility_graph(ps: PointSet) -> VisibilityGraph:
    """Adjacency by line structure: along each maximal line only consecutive
    points see each other; pairs on different lines are always visible."""
    n = len(ps)
    if n < 2:
        raise GeometryError("visibility graph needs at least 2 points")
    full = (1 << n) - 1
    adj = [full & ~(1 << i) for i in range(n)]
    for rec in ps.lines:
        if len(rec) < 3:
            continue
        order = sorted_along_line(ps, rec)
        for a, b in combinations(range(len(order)), 2):
            if b - a > 1:
                i, j = order[a], order[b]
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)
    return VisibilityGraph(tuple(adj), ps)


def diameter(g: VisibilityGraph) -> int:
    """Longest shortest path; a disconnected graph raises, loudly, because a
    visibility graph on >= 2 points can never be disconnected."""
    n = g.n
    worst = 0
    for s in range(n):
        dist = {s: 0}
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for u in _mask_bits(g.adj[v]):
                    if u not in dist:
                        dist[u] = d
                        nxt.append(u)
            frontier = nxt
        if len(dist) < n:
            missing = [v for v in range(n) if v not in dist]
            raise DisconnectedVisibility(
                f"visibility graph disconnected: {missing} unreachable from {s}; "
                "this indicates a geometry bug"
            )
        worst = max(worst, max(dist.values()))
    return worst


def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _deadline(budget_ms: Optional[int]) -> Optional[float]:
    return None if budget_ms is None else time.monotonic() + budget_ms / 1000.0


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    witness: tuple[int, ...]
    exact: bool

    def to_obj(self) -> dict:
        return {"omega": self.omega, "witness": list(self.witness), "exact": self.exact}


def clique_number(g: VisibilityGraph, budget_ms: Optional[int] = None) -> CliqueResult:
    size, witness, exact = cliques.max_clique(g.n, g.adj, _deadline(budget_ms))
    return CliqueResult(size, tuple(witness), exact)


@dataclass(frozen=True)
class Colouring:
    """Colour ids 1..k assigned per point index."""

    k: int
    colours: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise GeometryError("colour count must be at least 1")
        for i, c in enumerate(self.colours):
            if not isinstance(c, int) or not 1 <= c <= self.k:
                raise GeometryError(f"colour {c!r} at index {i} outside [1, {self.k}]")

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, c in enumerate(self.colours):
            out.setdefault(c, []).append(i)
        return out

    def to_obj(self) -> dict:
        return {"k": self.k, "colours": list(self.colours)}

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True)

    @classmethod
    def from_obj(cls, obj) -> "Colouring":
        if not isinstance(obj, dict) or "k" not in obj or "colours" not in obj:
            raise GeometryError("colouring object needs 'k' and 'colours'")
        return cls(obj["k"], tuple(obj["colours"]))

    @classmethod
    def from_json(cls, text: str) -> "Colouring":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise GeometryError(f"bad colouring JSON: {e}") from None
        return cls.from_obj(obj)


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    colouring: Colouring
    exact: bool
    lower: int
    upper: int

    def to_obj(self) -> dict:
        return {
            "chi": self.chi,
            "colouring": self.colouring.to_obj(),
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
        }


def chromatic_number(g: VisibilityGraph, budget_ms: Optional[int] = None) -> ChromaticResult:
    k, colours, exact, lower, upper = cliques.chromatic_number(g.n, g.adj, _deadline(budget_ms))
    return ChromaticResult(k, Colouring(max(colours), tuple(colours)), exact, lower, upper)


def turan_edges(n: int, k: int) -> int:
    """Edge count of the balanced complete k-partite graph on n vertices."""
    if n < 1 or k < 1:
        raise GeometryError("turan_edges needs n >= 1 and k >= 1")
    q, r = divmod(n, k)
    parts = [q + 1] * r + [q] * (k - r)
    return n * (n - 1) // 2 - sum(p * (p - 1) // 2 for p in parts)


@dataclass(frozen=True)
class BigLineBigCliqueVerdict:
    kind: str  # "line" | "clique" | "neither"
    line: Optional[LineRecord] = None
    clique: tuple[int, ...] = ()

    def to_obj(self) -> dict:
        obj: dict = {"kind": self.kind}
        if self.line is not None:
            obj["line"] = list(self.line.member_indices)
        if self.clique:
            obj["clique"] = list(self.clique)
        return obj


def big_line_big_clique_check(
    ps: PointSet, k: int, ell: int, budget_ms: Optional[int] = None
) -> BigLineBigCliqueVerdict:
    """Find ell collinear points or k pairwise visible ones; lines win ties."""
    if k < 2 or ell < 3:
        raise GeometryError("need k >= 2 and ell >= 3")
    for rec in ps.lines:
        if len(rec) >= ell:
            return BigLineBigCliqueVerdict("line", line=rec)
    g = visibility_graph(ps)
    size, witness, exact = cliques.max_clique(g.n, g.adj, _deadline(budget_ms))
    if size >= k:
        return BigLineBigCliqueVerdict("clique", clique=tuple(witness[:k]))
    if not exact:
        raise GeometryError("clique search budget exhausted before a verdict")
    return BigLineBigCliqueVerdict("neither")


@dataclass(frozen=True)
class Prop1Report:
    proper: bool
    violations: tuple[tuple[int, int], ...]
    max_collinear: int
    largest_class_colour: int
    largest_class: tuple[int, ...]
    s: int
    s_lower: int
    is_blocked: Optional[bool]
    uncovered_pair: Optional[tuple[int, int]]

    def to_obj(self) -> dict:
        return {
            "proper": self.proper,
            "violations": [list(v) for v in self.violations],
            "max_collinear": self.max_collinear,
            "largest_class_colour": self.largest_class_colour,
            "largest_class": list(self.largest_class),
            "s": self.s,
            "s_lower": self.s_lower,
            "is_blocked": self.is_blocked,
            "uncovered_pair": list(self.uncovered_pair) if self.uncovered_pair else None,
        }


def proposition1_check(ps: PointSet, col: Colouring, ell: int = 3) -> Prop1Report:
    """Certificate for the colouring-to-blocking reduction.

    Verifies the colouring is proper for the visibility graph, that the
    largest colour class S has size >= ceil(n/k), and that the rest of the
    set blocks S: every pair of S has a point of P outside S strictly inside
    its segment. Improper colourings are reported with their violations.
    """
    n = len(ps)
    if len(col.colours) != n:
        raise GeometryError(f"colouring has {len(col.colours)} entries for {n} points")
    g = visibility_graph(ps)
    violations = tuple(
        (i, j)
        for i, j in combinations(range(n), 2)
        if col.colours[i] == col.colours[j] and g.has_edge(i, j)
    )
    mc = max_collinear(ps)
    classes = col.classes()
    largest_colour = min(classes, key=lambda c: (-len(classes[c]), c))
    largest = tuple(classes[largest_colour])
    s = len(largest)
    s_lower = ceil(n / col.k)
    if violations:
        return Prop1Report(False, violations, mc, largest_colour, largest, s, s_lower, None, None)
    others = [ps[i] for i in range(n) if i not in set(largest)]
    uncovered = None
    for i, j in combinations(largest, 2):
        if not any(on_open_segment(b, ps[i], ps[j]) for b in others):
            uncovered = (i, j)
            break
    return Prop1Report(
        True, (), mc, largest_colour, largest, s, s_lower, uncovered is None, uncovered
    )


def monochromatic_line_check(ps: PointSet, col: Colouring) -> Optional[LineRecord]:
    """First maximal line whose members all share a colour, if any."""
    if len(col.colours) != len(ps):
        raise GeometryError("colouring length does not match point set")
    for rec in ps.lines:
        first = col.colours[rec.member_indices[0]]
        if all(col.colours[i] == first for i in rec.member_indices[1:]):
            return rec
    return None
