from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from visblock.errors import GeometryError
from visblock.geometry import PointSet
from visblock.visibility import (
    BigLineBigCliqueVerdict,
    Colouring,
    big_line_big_clique_check,
    chromatic_number,
    clique_number,
    diameter,
    monochromatic_line_check,
    proposition1_check,
    turan_edges,
    visibility_graph,
)

import oracles


def pset(*coords, name=""):
    return PointSet.build(coords, name)


TRIANGLE = pset((0, 0), (1, 0), (0, 1), name="triangle")
COLL3 = pset((0, 0), (1, 0), (2, 0), name="three-collinear")
GRID33 = pset(*[(x, y) for y in range(3) for x in range(3)], name="grid-3x3")


class TestVisibilityGraph:
    def test_collinear_path(self):
        g = visibility_graph(COLL3)
        assert g.edges() == [(0, 1), (1, 2)]

    def test_triangle_complete(self):
        g = visibility_graph(TRIANGLE)
        assert g.edge_count() == 3

    def test_grid33_edge_count(self):
        g = visibility_graph(GRID33)
        assert g.edge_count() == 28

    def test_grid33_matches_oracle(self):
        g = visibility_graph(GRID33)
        want = oracles.brute_visibility_edges([(p.x, p.y) for p in GRID33])
        assert set(g.edges()) == want

    def test_too_few(self):
        with pytest.raises(GeometryError):
            visibility_graph(pset((0, 0)))

    @given(st.lists(st.tuples(st.integers(min_value=0, max_value=6),
                              st.integers(min_value=0, max_value=6)),
                    min_size=2, max_size=8, unique=True))
    @settings(max_examples=80)
    def test_matches_oracle(self, coords):
        ps = PointSet.build(coords)
        g = visibility_graph(ps)
        assert set(g.edges()) == oracles.brute_visibility_edges(coords)

    @given(st.lists(st.tuples(st.integers(min_value=0, max_value=5),
                              st.integers(min_value=0, max_value=5)),
                    min_size=3, max_size=7, unique=True))
    @settings(max_examples=50)
    def test_removal_monotone(self, coords):
        # dropping a point never destroys visibility between the others
        ps = PointSet.build(coords)
        g = visibility_graph(ps)
        for drop in range(len(coords)):
            rest = coords[:drop] + coords[drop + 1:]
            sub = visibility_graph(PointSet.build(rest))

            def old_index(i):
                return i if i < drop else i + 1

            for i, j in combinations(range(len(rest)), 2):
                if g.has_edge(old_index(i), old_index(j)):
                    assert sub.has_edge(i, j)


class TestDiameter:
    def test_triangle(self):
        assert diameter(visibility_graph(TRIANGLE)) == 1

    def test_collinear_path(self):
        assert diameter(visibility_graph(COLL3)) == 2

    def test_grid33(self):
        assert diameter(visibility_graph(GRID33)) == 2

    def test_matches_oracle_on_grid(self):
        g = visibility_graph(GRID33)
        assert diameter(g) == oracles.brute_diameter(g.n, g.edges())

    @given(st.lists(st.tuples(st.integers(min_value=0, max_value=5),
                              st.integers(min_value=0, max_value=5)),
                    min_size=3, max_size=7, unique=True))
    @settings(max_examples=50)
    def test_non_collinear_diameter_at_most_2(self, coords):
        ps = PointSet.build(coords)
        from visblock.geometry import max_collinear
        if max_collinear(ps) == len(ps):
            return
        assert diameter(visibility_graph(ps)) <= 2


class TestCliqueAndChromatic:
    def test_triangle_clique(self):
        r = clique_number(visibility_graph(TRIANGLE))
        assert r.omega == 3 and r.exact

    def test_collinear_clique(self):
        r = clique_number(visibility_graph(COLL3))
        assert r.omega == 2 and r.exact

    def test_grid33_clique(self):
        g = visibility_graph(GRID33)
        r = clique_number(g)
        assert r.exact
        want, _ = oracles.brute_max_clique(g.n, g.edges())
        assert r.omega == want == 4
        for a, b in combinations(r.witness, 2):
            assert g.has_edge(a, b)

    def test_triangle_chromatic(self):
        r = chromatic_number(visibility_graph(TRIANGLE))
        assert r.chi == 3 and r.exact

    def test_collinear_chromatic(self):
        r = chromatic_number(visibility_graph(COLL3))
        assert r.chi == 2 and r.exact

    def test_grid33_chromatic(self):
        g = visibility_graph(GRID33)
        r = chromatic_number(g)
        want, _ = oracles.brute_chromatic(g.n, g.edges())
        assert r.exact and r.chi == want == 4
        # returned colouring is proper and uses chi colours
        assert max(r.colouring.colours) == 4
        for i, j in g.edges():
            assert r.colouring.colours[i] != r.colouring.colours[j]

    @given(st.lists(st.tuples(st.integers(min_value=0, max_value=4),
                              st.integers(min_value=0, max_value=4)),
                    min_size=2, max_size=7, unique=True))
    @settings(max_examples=40, deadline=None)
    def test_matches_oracles(self, coords):
        ps = PointSet.build(coords)
        g = visibility_graph(ps)
        cq = clique_number(g)
        ch = chromatic_number(g)
        ow, _ = oracles.brute_max_clique(g.n, g.edges())
        cw, _ = oracles.brute_chromatic(g.n, g.edges())
        assert cq.exact and cq.omega == ow
        assert ch.exact and ch.chi == cw
        assert cq.omega <= ch.chi


class TestTuran:
    def test_small(self):
        assert turan_edges(4, 2) == 4
        assert turan_edges(5, 2) == 6
        assert turan_edges(9, 4) == 30

    def test_direct_construction(self):
        # build the balanced 4-partite graph on 9 vertices and count
        parts = [[0, 1, 2], [3, 4], [5, 6], [7, 8]]
        count = 0
        for a, b in combinations(range(4), 2):
            count += len(parts[a]) * len(parts[b])
        assert count == turan_edges(9, 4)

    def test_edge_cases(self):
        assert turan_edges(1, 1) == 0
        assert turan_edges(5, 1) == 0
        assert turan_edges(5, 5) == 10
        with pytest.raises(GeometryError):
            turan_edges(0, 2)


class TestBigLineBigClique:
    def test_grid_prefers_line(self):
        v = big_line_big_clique_check(GRID33, 3, 3)
        assert v.kind == "line"
        assert len(v.line.member_indices) >= 3

    def test_triangle_clique(self):
        v = big_line_big_clique_check(TRIANGLE, 3, 3)
        assert v.kind == "clique" and v.clique == (0, 1, 2)

    def test_parabola_neither(self):
        ps = pset(*[(i, i * i) for i in range(5)])
        v = big_line_big_clique_check(ps, 6, 3)
        assert v.kind == "neither"

    def test_bad_params(self):
        with pytest.raises(GeometryError):
            big_line_big_clique_check(TRIANGLE, 1, 3)
        with pytest.raises(GeometryError):
            big_line_big_clique_check(TRIANGLE, 3, 2)


class TestColouring:
    def test_validation(self):
        with pytest.raises(GeometryError):
            Colouring(2, (1, 3))
        with pytest.raises(GeometryError):
            Colouring(0, ())

    def test_json_round_trip(self):
        c = Colouring(3, (1, 2, 3, 1))
        assert Colouring.from_json(c.to_json()) == c


class TestProposition1:
    def test_collinear_blocked(self):
        rep = proposition1_check(COLL3, Colouring(2, (1, 2, 1)))
        assert rep.proper
        assert rep.largest_class == (0, 2)
        assert rep.s == 2 and rep.s_lower == 2
        assert rep.is_blocked is True

    def test_improper_reported(self):
        rep = proposition1_check(TRIANGLE, Colouring(2, (1, 1, 2)))
        assert not rep.proper
        assert (0, 1) in rep.violations
        assert rep.is_blocked is None

    def test_grid_chi_colouring(self):
        g = visibility_graph(GRID33)
        r = chromatic_number(g)
        rep = proposition1_check(GRID33, r.colouring)
        assert rep.proper
        assert rep.s >= rep.s_lower
        assert rep.is_blocked is True

    def test_length_mismatch(self):
        with pytest.raises(GeometryError):
            proposition1_check(TRIANGLE, Colouring(2, (1, 2)))


class TestMonochromaticLine:
    def test_triangle_two_colours_always(self):
        for colours in product((1, 2), repeat=3):
            rec = monochromatic_line_check(TRIANGLE, Colouring(2, colours))
            assert rec is not None

    def test_collinear_alternating_absent(self):
        assert monochromatic_line_check(COLL3, Colouring(2, (1, 2, 1))) is None

    def test_grid_all_two_colourings(self):
        # every 2-colouring of the (non-collinear) grid has a monochromatic line
        for colours in product((1, 2), repeat=9):
            assert monochromatic_line_check(GRID33, Colouring(2, colours)) is not None
