import json
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from visblock.errors import DegenerateHull, DegenerateSegment, GeometryError
from visblock.geometry import (
    Point,
    PointSet,
    convex_hull_size,
    is_general_position,
    lines_of,
    max_collinear,
    midpoint,
    on_open_segment,
    orientation,
    segment_intersection,
    sorted_along_line,
)

P = Point


def pset(*coords, name=""):
    return PointSet.build(coords, name)

TRIANGLE = pset((0, 0), (1, 0), (0, 1), name="triangle")
SQUARE = pset((0, 0), (2, 0), (0, 2), (2, 2), name="square")
GRID33 = pset(*[(x, y) for y in range(3) for x in range(3)], name="grid-3x3")


# independent oracle: maximal lines straight from triple collinearity
def brute_lines(pts):
    n = len(pts)
    out = set()
    for i, j in combinations(range(n), 2):
        members = tuple(
            k for k in range(n)
            if k in (i, j) or orientation(pts[i], pts[j], pts[k]) == 0
        )
        out.add(members)
    return out


class TestOrientation:
    def test_collinear(self):
        assert orientation(P(0, 0), P(1, 0), P(2, 0)) == 0

    def test_ccw(self):
        assert orientation(P(0, 0), P(1, 0), P(0, 1)) == 1

    def test_cw(self):
        assert orientation(P(0, 0), P(0, 1), P(1, 0)) == -1

    @given(st.tuples(*[st.fractions(min_value=-5, max_value=5, max_denominator=8)] * 6))
    def test_antisymmetry_and_rotation(self, c):
        p, q, r = P(c[0], c[1]), P(c[2], c[3]), P(c[4], c[5])
        assert orientation(p, q, r) == -orientation(p, r, q)
        assert orientation(p, q, r) == orientation(q, r, p)


class TestOpenSegment:
    def test_midpoint_inside(self):
        assert on_open_segment(P(1, 1), P(0, 0), P(2, 2))

    def test_endpoint_excluded(self):
        assert not on_open_segment(P(0, 0), P(0, 0), P(2, 2))

    def test_beyond_endpoint(self):
        assert not on_open_segment(P(3, 3), P(0, 0), P(2, 2))

    def test_off_line(self):
        assert not on_open_segment(P(1, 0), P(0, 0), P(2, 2))

    def test_vertical_segment(self):
        assert on_open_segment(P(0, 1), P(0, 0), P(0, 3))
        assert not on_open_segment(P(0, 4), P(0, 0), P(0, 3))

    def test_degenerate(self):
        with pytest.raises(DegenerateSegment):
            on_open_segment(P(1, 1), P(2, 2), P(2, 2))

    @given(st.tuples(*[st.fractions(min_value=-4, max_value=4, max_denominator=6)] * 6))
    def test_membership_implies_collinear(self, c):
        x, a, b = P(c[0], c[1]), P(c[2], c[3]), P(c[4], c[5])
        if a == b:
            return
        if on_open_segment(x, a, b):
            assert orientation(a, b, x) == 0
            assert x != a and x != b


class TestSegmentIntersection:
    def test_square_diagonals(self):
        m = segment_intersection(P(0, 0), P(2, 2), P(0, 2), P(2, 0))
        assert m.kind == "point" and m.point == P(1, 1)

    def test_disjoint_collinear(self):
        m = segment_intersection(P(0, 0), P(1, 0), P(2, 0), P(3, 0))
        assert m.kind == "empty"

    def test_nested_collinear(self):
        m = segment_intersection(P(0, 0), P(4, 0), P(1, 0), P(2, 0))
        assert m.kind == "overlap"

    def test_endpoint_endpoint_touch(self):
        m = segment_intersection(P(0, 0), P(1, 0), P(1, 0), P(1, 1))
        assert m.kind == "empty"

    def test_collinear_endpoint_touch(self):
        m = segment_intersection(P(0, 0), P(1, 0), P(1, 0), P(2, 0))
        assert m.kind == "empty"

    def test_interior_endpoint_touch(self):
        # T-shape: an endpoint of one segment interior to the other
        m = segment_intersection(P(0, 0), P(2, 0), P(1, 0), P(1, 1))
        assert m.kind == "point" and m.point == P(1, 0)

    def test_parallel(self):
        m = segment_intersection(P(0, 0), P(2, 0), P(0, 1), P(2, 1))
        assert m.kind == "empty"

    def test_degenerate(self):
        with pytest.raises(DegenerateSegment):
            segment_intersection(P(0, 0), P(0, 0), P(1, 0), P(2, 0))

    @given(st.tuples(*[st.integers(min_value=-4, max_value=4)] * 8))
    def test_symmetry(self, c):
        a1, b1 = P(c[0], c[1]), P(c[2], c[3])
        a2, b2 = P(c[4], c[5]), P(c[6], c[7])
        if a1 == b1 or a2 == b2:
            return
        m1 = segment_intersection(a1, b1, a2, b2)
        m2 = segment_intersection(a2, b2, a1, b1)
        assert m1.kind == m2.kind
        assert m1.point == m2.point

    @given(st.tuples(*[st.integers(min_value=-4, max_value=4)] * 8))
    def test_point_result_lies_on_both(self, c):
        a1, b1 = P(c[0], c[1]), P(c[2], c[3])
        a2, b2 = P(c[4], c[5]), P(c[6], c[7])
        if a1 == b1 or a2 == b2:
            return
        m = segment_intersection(a1, b1, a2, b2)
        if m.kind == "point":
            x = m.point
            on1 = on_open_segment(x, a1, b1) or x in (a1, b1)
            on2 = on_open_segment(x, a2, b2) or x in (a2, b2)
            assert on1 and on2
            assert on_open_segment(x, a1, b1) or on_open_segment(x, a2, b2)


class TestLines:
    def test_three_collinear(self):
        recs = lines_of(pset((0, 0), (1, 0), (2, 0)))
        assert len(recs) == 1
        assert recs[0].member_indices == (0, 1, 2)

    def test_triangle(self):
        recs = lines_of(TRIANGLE)
        assert len(recs) == 3
        assert all(len(r) == 2 for r in recs)

    def test_grid33_census(self):
        recs = GRID33.lines
        assert len(recs) == 20
        sizes = sorted(len(r) for r in recs)
        assert sizes == [2] * 12 + [3] * 8

    def test_canonical_order(self):
        recs = lines_of(pset((0, 0), (1, 0), (5, 7)))
        assert [r.member_indices for r in recs] == sorted(r.member_indices for r in recs)

    def test_too_few(self):
        with pytest.raises(GeometryError):
            lines_of(pset((0, 0)))

    def test_sorted_along_line(self):
        ps = pset((4, 0), (0, 0), (2, 0), (1, 5))
        rec = next(r for r in ps.lines if len(r) == 3)
        order = sorted_along_line(ps, rec)
        assert order == [1, 2, 0]

    def test_matches_brute_force_on_grid(self):
        assert {r.member_indices for r in GRID33.lines} == brute_lines(list(GRID33))

    @given(st.lists(st.tuples(st.integers(min_value=0, max_value=6),
                              st.integers(min_value=0, max_value=6)),
                    min_size=2, max_size=8, unique=True))
    @settings(max_examples=60)
    def test_matches_brute_force(self, coords):
        ps = PointSet.build(coords)
        assert {r.member_indices for r in ps.lines} == brute_lines(list(ps))

    @given(st.lists(st.tuples(st.integers(min_value=0, max_value=8),
                              st.integers(min_value=0, max_value=8)),
                    min_size=2, max_size=9, unique=True))
    @settings(max_examples=60)
    def test_pair_count_identity(self, coords):
        # every pair lies on exactly one line
        ps = PointSet.build(coords)
        n = len(ps)
        assert sum(len(r) * (len(r) - 1) // 2 for r in ps.lines) == n * (n - 1) // 2

    def test_maximality_exhaustive(self):
        for ps in (GRID33, TRIANGLE, SQUARE, pset((0, 0), (1, 1), (2, 2), (3, 0), (0, 3))):
            pts = list(ps)
            for rec in ps.lines:
                members = set(rec.member_indices)
                i, j = rec.member_indices[:2]
                for k in range(len(pts)):
                    if k not in members:
                        assert orientation(pts[i], pts[j], pts[k]) != 0


class TestMaxCollinear:
    def test_triangle(self):
        assert max_collinear(TRIANGLE) == 2

    def test_grid(self):
        assert max_collinear(GRID33) == 3

    def test_parabola(self):
        ps = pset(*[(i, i * i) for i in range(5)])
        assert max_collinear(ps) == 2
        assert is_general_position(ps)


class TestConvexHull:
    def test_square(self):
        assert convex_hull_size(SQUARE) == 4

    def test_square_plus_center(self):
        ps = pset((0, 0), (2, 0), (0, 2), (2, 2), (1, 1))
        assert convex_hull_size(ps) == 4

    def test_grid33(self):
        assert convex_hull_size(GRID33) == 8

    def test_edge_interior_points_count(self):
        ps = pset((0, 0), (4, 0), (0, 4), (2, 0))
        assert convex_hull_size(ps) == 4

    def test_collinear_rejected(self):
        with pytest.raises(DegenerateHull):
            convex_hull_size(pset((0, 0), (1, 0), (2, 0)))

    def test_too_few(self):
        with pytest.raises(DegenerateHull):
            convex_hull_size(pset((0, 0), (1, 0)))


class TestPointSet:
    def test_duplicate_rejected(self):
        with pytest.raises(GeometryError):
            pset((0, 0), (1, 1), (0, 0))

    def test_fraction_normalisation(self):
        p = P(Fraction(2, 4), Fraction(-3, -6))
        assert p.x.denominator == 2 and p.x.numerator == 1
        assert p.x == p.y

    def test_json_round_trip(self):
        ps = pset((Fraction(3, 2), -7), (0, 1), name="pair")
        again = PointSet.from_json(ps.to_json())
        assert again == ps
        obj = json.loads(ps.to_json())
        assert obj["points"][0] == ["3/2", "-7/1"]

    def test_zero_denominator_rejected(self):
        with pytest.raises(GeometryError):
            PointSet.from_json('{"name": "bad", "points": [["1/0", "2/1"]]}')

    def test_duplicate_in_json_rejected(self):
        text = '{"name": "dup", "points": [["1/1", "2/1"], ["2/2", "4/2"]]}'
        with pytest.raises(GeometryError):
            PointSet.from_json(text)

    def test_malformed_rejected(self):
        with pytest.raises(GeometryError):
            PointSet.from_json('{"name": "x"}')
        with pytest.raises(GeometryError):
            PointSet.from_json('{"points": [["1/1"]]}')
        with pytest.raises(GeometryError):
            PointSet.from_json("not json at all")

    def test_midpoint_helper(self):
        assert midpoint(P(0, 0), P(1, 1)) == P(Fraction(1, 2), Fraction(1, 2))
