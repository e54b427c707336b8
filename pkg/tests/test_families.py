"""Family generators: closed-form counts, identities, structural remarks."""

from __future__ import annotations

import pytest

from crosscheck.errors import GraphError
from crosscheck import families as fam
from crosscheck.exhaustive import are_isomorphic
from crosscheck.multigraph import is_k_connected
from crosscheck.planarity import is_planar
from crosscheck.predicates import is_almost_4_connected

CLOSED_FORMS = [
    (fam.wheel, lambda k: (k + 1, 2 * k), 3),
    (fam.alt_double_wheel, lambda k: (2 * k + 2, 4 * k), 2),
    (fam.b_graph, lambda k: (2 * k + 2, 4 * k + 1), 2),
    (fam.ladder, lambda k: (2 * k, 3 * k - 2), 1),
    (fam.w_prime, lambda k: (2 * k - 2, 3 * k - 3), 3),
    (fam.circular_ladder, lambda k: (2 * k, 3 * k), 3),
    (fam.mobius_ladder, lambda k: (2 * k, 3 * k), 3),
    (fam.k4k, lambda k: (4 + k, 4 * k), 1),
    (fam.k4k_split, lambda k: (2 * k + 4, 5 * k), 1),
    (fam.k3k, lambda k: (3 + k, 3 * k), 1),
    (fam.cycle_with_distance_k_chords, lambda k: (2 * k + 1, 4 * k + 2), 2),
    (fam.cycle_plus_two_hubs, lambda k: (k + 2, 3 * k + 1), 2),
]


@pytest.mark.parametrize("gen,form,kmin", CLOSED_FORMS)
def test_closed_forms(gen, form, kmin):
    for k in range(kmin, 13):
        g = gen(k).graph
        assert (g.num_vertices, g.num_edges) == form(k), (gen.__name__, k)


@pytest.mark.parametrize("gen,kmin", [(g, k) for g, _, k in CLOSED_FORMS])
def test_parameter_guards(gen, kmin):
    with pytest.raises(GraphError):
        gen(kmin - 1)


class TestWheel:
    def test_w3_is_k4(self):
        assert are_isomorphic(fam.wheel(3).graph, fam.complete(4))

    def test_w4_counts(self):
        g = fam.wheel(4).graph
        assert (g.num_vertices, g.num_edges) == (5, 8)

    def test_w6_degrees(self):
        lg = fam.wheel(6)
        assert lg.graph.degree(lg.vertex("hub")) == 6
        assert all(lg.graph.degree(lg.vertex(f"rim:{i}")) == 3 for i in range(1, 7))


class TestDoubleWheel:
    def test_a4_counts(self):
        g = fam.alt_double_wheel(4).graph
        assert (g.num_vertices, g.num_edges) == (10, 16)

    def test_hub_degrees(self):
        for k in (2, 4, 7):
            lg = fam.alt_double_wheel(k)
            assert lg.graph.degree(lg.vertex("hub0")) == k
            assert lg.graph.degree(lg.vertex("hub0'")) == k

    def test_a5_planar(self):
        assert is_planar(fam.alt_double_wheel(5).graph)

    def test_b4(self):
        g = fam.b_graph(4).graph
        assert (g.num_vertices, g.num_edges) == (10, 17)
        assert not is_planar(g)

    def test_b2_minus_hub_edge_is_a2(self):
        lg = fam.b_graph(2)
        hub_edge = max(lg.graph.edge_ids)
        assert set(lg.graph.ends(hub_edge)) == {lg.vertex("hub0"), lg.vertex("hub0'")}
        assert are_isomorphic(
            lg.graph.delete_edge(hub_edge), fam.alt_double_wheel(2).graph
        )


class TestLadders:
    def test_mobius3_is_k33(self):
        assert are_isomorphic(fam.mobius_ladder(3).graph, fam.complete_bipartite(3, 3))

    def test_circular4_cube(self):
        g = fam.circular_ladder(4).graph
        assert (g.num_vertices, g.num_edges) == (8, 12)
        assert is_planar(g)

    def test_w_prime4(self):
        g = fam.w_prime(4).graph
        assert (g.num_vertices, g.num_edges) == (6, 9)

    def test_mobius_cross_edges(self):
        lg = fam.mobius_ladder(5)
        g = lg.graph
        v1, vk = lg.vertex("rail-v:1"), lg.vertex("rail-v:5")
        u1, uk = lg.vertex("rail-u:1"), lg.vertex("rail-u:5")
        assert u1 in g.neighbors(vk) and v1 in g.neighbors(uk)

    def test_planarity_family_facts(self):
        for k in range(3, 9):
            assert not is_planar(fam.mobius_ladder(k).graph)
            assert is_planar(fam.circular_ladder(k).graph)
        for k in range(2, 9):
            assert is_planar(fam.alt_double_wheel(k).graph)


class TestBipartiteShapes:
    def test_k44_counts(self):
        g = fam.k4k(4).graph
        assert (g.num_vertices, g.num_edges) == (8, 16)

    def test_split_counts_and_degrees(self):
        lg = fam.k4k_split(4)
        assert (lg.graph.num_vertices, lg.graph.num_edges) == (12, 20)
        for i in range(1, 5):
            assert lg.graph.degree(lg.vertex(f"v:{i}")) == 3

    def test_split_adjacency(self):
        lg = fam.k4k_split(3)
        g = lg.graph
        x, y = lg.vertex("x"), lg.vertex("y")
        xp, yp = lg.vertex("x'"), lg.vertex("y'")
        for i in range(1, 4):
            vi, vpi = lg.vertex(f"v:{i}"), lg.vertex(f"v':{i}")
            assert g.neighbors(vi) == {vpi, x, y}
            assert g.neighbors(vpi) == {vi, xp, yp}


class TestOutcomeGraphs:
    def test_chords2_is_k5(self):
        assert are_isomorphic(fam.cycle_with_distance_k_chords(2).graph, fam.complete(5))

    def test_two_hubs3_is_k5(self):
        assert are_isomorphic(fam.cycle_plus_two_hubs(3).graph, fam.complete(5))

    def test_a4_gadget_counts(self):
        lg = fam.a4_gadget()
        assert (lg.graph.num_vertices, lg.graph.num_edges) == (12, 19)
        p, q = lg.vertex("mid:1"), lg.vertex("mid:2")
        assert q in lg.graph.neighbors(p)
        assert lg.graph.degree(p) == 3 and lg.graph.degree(q) == 3


class TestRemarks:
    def test_three_connected_families(self):
        for k in range(4, 9):
            assert is_k_connected(fam.wheel(k).graph, 3)
            assert is_k_connected(fam.w_prime(k).graph, 3)
            assert is_k_connected(fam.k3k(k).graph, 3)

    def test_almost_four_connected_families(self):
        for k in (4, 5, 6):
            for gen in (
                fam.alt_double_wheel,
                fam.circular_ladder,
                fam.mobius_ladder,
                fam.k4k,
                fam.k4k_split,
            ):
                assert is_almost_4_connected(gen(k).graph), (gen.__name__, k)
