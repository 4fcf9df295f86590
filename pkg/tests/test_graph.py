import math

import pytest
from hypothesis import given, strategies as st

from mixedorient.errors import DisconnectedGraph, EmptySet
from mixedorient.graph import (
    INF,
    Edge,
    MixedMultigraph,
    bridges,
    contract,
    diameter,
    distance,
    distances_from,
    distances_to,
    eccentricity,
    is_strongly_connected,
    is_strongly_orientable,
    radius_center,
    restrict,
)

from corpus import lower_bound_family, random_corpus
from oracles import brute_bridges, floyd_warshall, fw_diameter, fw_radius, fw_strong


@st.composite
def mixed_graphs(draw, min_n=1, max_n=7, max_m=12):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return MixedMultigraph(1, [])
    m = draw(st.integers(0, max_m))
    triples = []
    for _ in range(m):
        a = draw(st.integers(0, n - 1))
        b = draw(st.integers(0, n - 1).filter(lambda x: x != a))
        triples.append((a, b, draw(st.booleans())))
    return MixedMultigraph(n, triples)


def tri():
    return MixedMultigraph(3, [(0, 1, False), (1, 2, False), (2, 0, False)])


def dtri():
    return MixedMultigraph(3, [(0, 1, True), (1, 2, True), (2, 0, True)])


def path3():
    return MixedMultigraph(3, [(0, 1, False), (1, 2, False)])


def path_plus_arc():
    return MixedMultigraph(3, [(0, 1, False), (1, 2, False), (2, 0, True)])


def dc4():
    return MixedMultigraph(4, [(i, (i + 1) % 4, True) for i in range(4)])


class TestConstruction:
    def test_edges_from_triples_get_dense_ids(self):
        g = MixedMultigraph(3, [(0, 1, False), (2, 1, True)])
        assert [e.id for e in g.edges] == [0, 1]
        assert g.edges[1] == Edge(1, 2, 1, True)

    def test_edge_objects_are_renumbered(self):
        g = MixedMultigraph(2, [Edge(7, 0, 1, True)])
        assert g.edges[0].id == 0

    def test_endpoint_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            MixedMultigraph(2, [(0, 2, False)])

    def test_other_endpoint(self):
        e = Edge(0, 3, 5)
        assert e.other(3) == 5 and e.other(5) == 3
        with pytest.raises(ValueError):
            e.other(4)

    def test_parallel_edges_kept(self):
        g = MixedMultigraph(2, [(0, 1, False), (0, 1, False), (1, 0, True)])
        assert len(g.edges_between(0, 1)) == 3
        assert g.neighbors(0) == {1}

    def test_orient_rejects_foreign_head(self):
        with pytest.raises(ValueError):
            tri().orient({0: 2})

    def test_orient_keeps_ids_and_other_edges(self):
        h = tri().orient({1: 1})
        assert h.edges[1] == Edge(1, 2, 1, True)
        assert not h.edges[0].directed and not h.edges[2].directed

    def test_reverse_twice_is_identity(self):
        g = path_plus_arc()
        assert g.reverse().reverse() == g
        assert g.reverse().edges[2] == Edge(2, 0, 2, True)

    def test_restrict_keeps_vertex_set(self):
        h = restrict(tri(), {0, 2})
        assert h.n == 3 and h.m == 2


class TestDistances:
    def test_directed_triangle_from(self):
        assert distances_from(dtri(), 0) == [0, 1, 2]

    def test_single_edge_from(self):
        assert distances_from(MixedMultigraph(2, [(0, 1, False)]), 0) == [0, 1]

    def test_directed_triangle_to(self):
        assert distances_to(dtri(), 0) == [0, 2, 1]

    def test_single_arc_to(self):
        assert distances_to(MixedMultigraph(2, [(0, 1, True)]), 0) == [0, INF]

    def test_lower_bound_family_depth_from_root(self):
        fam = lower_bound_family(3)
        assert max(distances_from(fam.graph, fam.root)) == 3

    def test_distance_limit_and_skip(self):
        g = MixedMultigraph(4, [(0, 1, True), (1, 2, True), (2, 3, True), (0, 3, True)])
        assert distance(g, 0, 3) == 1
        assert distance(g, 0, 3, skip=3) == 3
        assert distance(g, 0, 3, skip=3, limit=2) == INF

    @given(mixed_graphs())
    def test_matches_floyd_warshall(self, g):
        d = floyd_warshall(g)
        for v in range(g.n):
            assert distances_from(g, v) == d[v]
            assert distances_to(g, v) == [d[x][v] for x in range(g.n)]

    @given(mixed_graphs())
    def test_to_equals_from_on_reversal(self, g):
        r = g.reverse()
        for v in range(g.n):
            assert distances_to(g, v) == distances_from(r, v)

    @given(mixed_graphs())
    def test_triangle_inequality_along_edges(self, g):
        for s in range(g.n):
            d = distances_from(g, s)
            for e in g.edges:
                assert d[e.head] <= d[e.tail] + 1
                if not e.directed:
                    assert d[e.tail] <= d[e.head] + 1


class TestRadiusDiameter:
    def test_undirected_path(self):
        assert radius_center(path3()) == (1, {1})
        assert diameter(path3()) == 2

    def test_directed_four_cycle(self):
        assert radius_center(dc4()) == (3, {0, 1, 2, 3})
        assert diameter(dc4()) == 3

    def test_lower_bound_family_unique_center(self):
        fam = lower_bound_family(3)
        assert radius_center(fam.graph) == (3, {fam.root})

    def test_disconnected_raises(self):
        g = MixedMultigraph(2, [(0, 1, True)])
        with pytest.raises(DisconnectedGraph):
            radius_center(g)
        with pytest.raises(DisconnectedGraph):
            diameter(g)

    def test_single_vertex(self):
        assert radius_center(MixedMultigraph(1)) == (0, {0})

    def test_corpus_radius_diameter_sandwich(self):
        for g in random_corpus(100, 12, 1):
            r, centers = radius_center(g)
            d = diameter(g)
            assert r <= d <= 2 * r
            assert r == fw_radius(g) and d == fw_diameter(g)
            assert all(eccentricity(g, c) == r for c in centers)

    @given(mixed_graphs(min_n=2))
    def test_strong_connectivity_matches_reference(self, g):
        assert is_strongly_connected(g) == fw_strong(g)


class TestBridges:
    def test_path(self):
        assert bridges(path3()) == {0, 1}

    def test_triangle(self):
        assert bridges(tri()) == set()

    def test_path_plus_arc_has_none(self):
        assert bridges(path_plus_arc()) == set()

    def test_parallel_pair_is_not_a_bridge(self):
        g = MixedMultigraph(3, [(0, 1, False), (0, 1, False), (1, 2, False)])
        assert bridges(g) == {2}

    def test_arcs_never_reported(self):
        assert bridges(MixedMultigraph(2, [(0, 1, True)])) == set()

    @given(mixed_graphs(max_n=8, max_m=14))
    def test_matches_deletion_reference(self, g):
        assert bridges(g) == brute_bridges(g)

    @given(mixed_graphs(max_n=6, max_m=8), st.integers(0, 5), st.integers(0, 5), st.booleans())
    def test_adding_an_edge_never_adds_bridges(self, g, a, b, directed):
        a, b = a % g.n, b % g.n
        if a == b:
            return
        h = MixedMultigraph(g.n, g.triples() + [(a, b, directed)])
        assert bridges(h) <= bridges(g) | {h.m - 1}
        assert bridges(h) - {h.m - 1} <= bridges(g)


class TestOrientability:
    def test_examples(self):
        assert is_strongly_orientable(tri())
        assert not is_strongly_orientable(path3())
        assert is_strongly_orientable(path_plus_arc())

    def test_path_plus_arc_witness(self):
        h = path_plus_arc().orient({0: 1, 1: 2})
        assert is_strongly_connected(h)


class TestContraction:
    def test_triangle_pair(self):
        cm = contract(tri(), {0, 1})
        assert cm.quotient.n == 2
        assert cm.super_vertex == 0
        assert cm.quotient.m == 2
        assert all(not e.directed for e in cm.quotient.edges)
        assert cm.origin_of_edge == (1, 2)

    def test_single_vertex_is_identity(self):
        g = path_plus_arc()
        cm = contract(g, {1})
        assert cm.quotient == g
        assert cm.origin_of_edge == (0, 1, 2)
        assert cm.class_of_vertex == (0, 1, 2)

    def test_empty_set_rejected(self):
        with pytest.raises(EmptySet):
            contract(tri(), set())

    def test_super_vertex_takes_min_slot(self):
        g = MixedMultigraph(5, [(0, 1, False), (1, 2, False), (2, 3, True), (3, 4, False), (4, 0, True)])
        cm = contract(g, {2, 4})
        assert cm.super_vertex == 2
        assert cm.class_of_vertex == (0, 1, 2, 3, 2)
        assert cm.quotient.triples() == [(0, 1, False), (1, 2, False), (2, 3, True), (3, 2, False), (2, 0, True)]

    @given(mixed_graphs(min_n=2, max_n=7), st.sets(st.integers(0, 6), min_size=1))
    def test_quotient_shape_and_distances(self, g, vset):
        vset = {v % g.n for v in vset}
        cm = contract(g, vset)
        q = cm.quotient
        assert q.n == g.n - len(vset) + 1
        internal = sum(1 for e in g.edges if e.tail in vset and e.head in vset)
        assert q.m == g.m - internal
        for qe, oe in zip(q.edges, cm.origin_of_edge):
            e = g.edges[oe]
            assert (qe.tail, qe.head, qe.directed) == (cm.class_of_vertex[e.tail], cm.class_of_vertex[e.head], e.directed)
        dq = distances_from(q, cm.super_vertex)
        best = [min(distances_from(g, w)[x] for w in vset) for x in range(g.n)]
        for x in range(g.n):
            assert dq[cm.class_of_vertex[x]] <= best[x]


def test_inf_is_math_inf():
    assert INF == math.inf
