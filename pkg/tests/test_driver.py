import pytest
from hypothesis import given, settings, strategies as st

from mixedorient.cycles import eta
from mixedorient.driver import (
    Orientation,
    bound_theorem1,
    bound_theorem2,
    diameter_bound,
    strong_orientation,
    strong_orientation_eta,
    verify_orientation,
)
from mixedorient.errors import NotStronglyOrientable, SourceMismatch
from mixedorient.graph import (
    MixedMultigraph,
    contract,
    diameter,
    distances_from,
    distances_to,
    eccentricity,
    is_strongly_connected,
    is_strongly_orientable,
    radius_center,
)
from mixedorient.oracle import oriented_radius_exact
from mixedorient.partition import phase_plan

from corpus import chordal_corpus, lower_bound_family, random_corpus
from oracles import brute_oriented_radius, fw_diameter, fw_radius, fw_strong


def cycle(n):
    return MixedMultigraph(n, [(i, (i + 1) % n, False) for i in range(n)])


class TestBounds:
    def test_general_bound_values(self):
        assert bound_theorem1(3) == 17.5
        assert bound_theorem1(0) == 1
        with pytest.raises(ValueError):
            bound_theorem1(-1)

    @given(st.integers(1, 300))
    def test_eta3_is_linear(self, r):
        assert bound_theorem2(r, 3) == 2.5 * r + 1

    @given(st.integers(1, 300))
    def test_full_eta_matches_general_bound(self, r):
        eta_full = 2 * r + 1
        expected = 1.5 * r * eta_full - 0.375 * (eta_full - 1) * (eta_full - 3) - 2 * r + 1
        assert bound_theorem2(r, eta_full) == expected == bound_theorem1(r)

    def test_eta_range(self):
        with pytest.raises(ValueError):
            bound_theorem2(2, 6)
        with pytest.raises(ValueError):
            bound_theorem2(2, 1)

    def test_diameter_bound(self):
        assert [diameter_bound(d) for d in range(4)] == [2, 7, 18, 35]


class TestStrongOrientation:
    def test_fully_directed_is_identity(self):
        g = MixedMultigraph(4, [(0, 1, True), (1, 2, True), (2, 3, True), (3, 0, True), (0, 2, True)])
        o, rep = strong_orientation(g)
        assert o.direction_of == {}
        assert o.apply() == g
        assert rep.radius_after == rep.radius_before == radius_center(g)[0]

    def test_undirected_four_cycle(self):
        o, rep = strong_orientation(cycle(4))
        h = o.apply()
        assert is_strongly_connected(h) and h.is_fully_directed()
        assert rep.radius_before == 2
        assert rep.radius_after == 3 <= int(bound_theorem1(2)) == 9
        assert oriented_radius_exact(cycle(4)).oriented_radius == 3

    def test_lower_bound_family_r3(self):
        o, rep = strong_orientation(lower_bound_family(3).graph)
        assert rep.radius_after <= 17
        assert verify_orientation(o.source, o).valid

    def test_single_vertex(self):
        o, rep = strong_orientation(MixedMultigraph(1))
        assert rep.radius_after == 0 and rep.phases == ()

    def test_rejects_non_orientable(self):
        with pytest.raises(NotStronglyOrientable):
            strong_orientation(MixedMultigraph(3, [(0, 1, False), (1, 2, False)]))
        with pytest.raises(NotStronglyOrientable):
            strong_orientation(MixedMultigraph(2, [(0, 1, False), (0, 1, False), (0, 0, False)]))
        with pytest.raises(NotStronglyOrientable):
            strong_orientation_eta(MixedMultigraph(2, [(0, 1, True)]))

    def test_plan_followed(self):
        g = lower_bound_family(3).graph
        _, rep = strong_orientation(g)
        plan = phase_plan(3)
        assert [p.phase_index for p in rep.phases] == [3, 2, 1]
        assert all(p.mode == plan.mode(p.phase_index) for p in rep.phases)

    def test_corpus_within_bound_and_valid(self):
        for g in random_corpus(300, 12, 11):
            o, rep = strong_orientation(g)
            assert o.is_total()
            ver = verify_orientation(g, o)
            assert ver.valid, g.triples()
            assert rep.radius_after == ver.radius == fw_radius(o.apply())
            assert rep.radius_after <= int(bound_theorem1(rep.radius_before))

    def test_phase_bookkeeping(self):
        for g in random_corpus(300, 12, 12):
            o, rep = strong_orientation(g)
            if not rep.phases:
                continue
            r = rep.radius_before
            seen = set()
            merged = set()
            for p in rep.phases:
                assert p.within_bounds()
                # phases assign disjoint edge sets
                assert not p.assigned_edges & seen
                seen |= p.assigned_edges
                merged |= p.captured_vertices
                # the next center has eccentricity at most i-1
                cm = contract(g, merged)
                assert eccentricity(cm.quotient, cm.super_vertex) <= p.phase_index - 1
            plan = phase_plan(r)
            out_cap = sum(2 * i if plan.mode(i) == "out" else 4 * i - 1 for i in range(1, r + 1))
            in_cap = sum(4 * i - 1 if plan.mode(i) == "out" else 2 * i for i in range(1, r + 1))
            assert rep.sum_out() <= out_cap and rep.sum_in() <= in_cap
            assert max(rep.sum_out(), rep.sum_in()) <= bound_theorem1(r)
            h = o.apply()
            assert max(distances_from(h, rep.center)) <= rep.sum_out()
            assert max(distances_to(h, rep.center)) <= rep.sum_in()

    def test_oracle_sandwich(self):
        for g in random_corpus(150, 8, 13):
            if g.n == 1 or len(g.undirected_edge_ids()) > 12:
                continue
            _, rep = strong_orientation(g)
            best = oriented_radius_exact(g).oriented_radius
            assert best <= rep.radius_after <= int(bound_theorem1(rep.radius_before))

    @settings(max_examples=40)
    @given(st.integers(0, 10**6))
    def test_deterministic(self, seed):
        g = random_corpus(1, 10, seed)[0]
        a = strong_orientation(g)
        b = strong_orientation(g)
        assert a[0].direction_of == b[0].direction_of and a[1] == b[1]


class TestEtaVariant:
    def test_undirected_triangle(self):
        g = cycle(3)
        o, rep = strong_orientation_eta(g)
        assert rep.eta_used == 3
        assert rep.radius_after == 2 <= 3.5 == rep.bound
        assert oriented_radius_exact(g).oriented_radius == 2

    def test_chordal_instances(self):
        for g in chordal_corpus():
            o, rep = strong_orientation_eta(g)
            assert rep.eta_used == 3
            assert rep.radius_after <= 2.5 * rep.radius_before + 1
            assert verify_orientation(g, o).strong

    def test_corpus_within_bound(self):
        for g in random_corpus(300, 12, 14):
            o, rep = strong_orientation_eta(g)
            if g.n == 1:
                continue
            k = eta(g)
            assert rep.eta_used == k
            assert rep.radius_after <= bound_theorem2(rep.radius_before, k)
            assert is_strongly_connected(o.apply())
            for p in rep.phases:
                assert p.within_bounds()

    def test_two_cycles_everywhere(self):
        g = MixedMultigraph(3, [(0, 1, False), (0, 1, False), (1, 2, False), (1, 2, False)])
        o, rep = strong_orientation_eta(g)
        assert rep.eta_used == 2
        assert rep.radius_after <= rep.bound


class TestVerify:
    def test_directed_triangle(self):
        g = MixedMultigraph(3, [(0, 1, True), (1, 2, True), (2, 0, True)])
        ver = verify_orientation(g, Orientation(g, {}))
        assert ver.valid and ver.radius == 2

    def test_alternating_four_cycle(self):
        g = cycle(4)
        o = Orientation(g, {0: 1, 1: 1, 2: 3, 3: 3})
        ver = verify_orientation(g, o)
        assert ver.total and not ver.strong and not ver.valid
        assert ver.radius is None

    def test_partial_orientation(self):
        g = cycle(3)
        ver = verify_orientation(g, Orientation(g, {0: 1}))
        assert not ver.total and not ver.valid

    def test_source_mismatch(self):
        with pytest.raises(SourceMismatch):
            verify_orientation(cycle(3), Orientation(cycle(4), {}))

    def test_brute_force_agreement(self):
        for g in random_corpus(60, 6, 15):
            if len(g.undirected_edge_ids()) > 8 or g.n == 1:
                continue
            o, rep = strong_orientation(g)
            h = o.apply()
            assert fw_strong(h)
            ver = verify_orientation(g, o)
            assert ver.diameter == fw_diameter(h)
            assert ver.source_diameter == diameter(g)
            best, count = brute_oriented_radius(g)
            assert count >= 1 and best <= rep.radius_after
