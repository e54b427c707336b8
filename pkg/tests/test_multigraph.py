"""Multigraph core: editing ops, separations, connectivity, blocks."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from crosscheck.errors import GraphError, LoopContractionError, UnknownIdError
from crosscheck.families import alt_double_wheel, complete, cycle, ladder, mobius_ladder
from crosscheck.multigraph import (
    Multigraph,
    blocks,
    enumerate_separations,
    is_k_connected,
)

from helpers import edge_between, separations_by_subsets, vertex_cut_free


@st.composite
def multigraphs(draw, max_n=8, max_m=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=0, max_value=max_m))
    pairs = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        pairs.append((u, v))
    return Multigraph.from_pairs(pairs, extra_vertices=range(n))


class TestConstruction:
    def test_ids_stable_under_deletion(self):
        g = Multigraph.from_pairs([(0, 1), (1, 2), (2, 0)])
        h = g.delete_edge(1)
        assert h.ends(0) == (0, 1) and h.ends(2) == (2, 0)
        h2 = g.delete_vertex(0)
        assert h2.ends(1) == (1, 2)

    def test_duplicate_edge_id_rejected(self):
        with pytest.raises(GraphError):
            Multigraph([0, 1], [(0, 0, 1), (0, 1, 0)])

    def test_dangling_endpoint_rejected(self):
        with pytest.raises(UnknownIdError):
            Multigraph([0], [(0, 0, 1)])

    def test_degree_counts_loops_twice(self):
        g = Multigraph([0, 1], [(0, 0, 0), (1, 0, 1)])
        assert g.degree(0) == 3
        assert g.neighbors(0) == {1}


class TestRestrict:
    def test_k5_restrict_is_k4(self):
        g = complete(5).restrict([0, 1, 2, 3])
        assert g.num_vertices == 4 and g.num_edges == 6

    def test_identity(self):
        g = complete(4)
        assert g.restrict(g.vertices) == g

    def test_a4_star(self):
        # hub 0 with rim positions 1 and 3 induces a 2-edge star
        lg = alt_double_wheel(4)
        v0 = lg.vertex("hub0")
        r1 = lg.vertex("rim:1")
        r3 = lg.vertex("rim:3")
        sub = lg.graph.restrict([v0, r1, r3])
        assert sub.num_edges == 2
        assert all(v0 in sub.ends(e) for e in sub.edge_ids)

    def test_unknown_vertex(self):
        with pytest.raises(UnknownIdError):
            complete(4).restrict([0, 9])


class TestSubdivide:
    def test_triangle_becomes_square(self):
        g, nv, ne = cycle(3).subdivide_edge(0, 1)
        assert g.num_vertices == 4 and g.num_edges == 4
        assert all(g.degree(v) == 2 for v in g.vertices)

    def test_loop_becomes_parallel_pair(self):
        g, nv, _ = Multigraph([5], [(3, 5, 5)]).subdivide_edge(3, 1)
        assert g.num_vertices == 2 and g.num_edges == 2
        assert all(set(g.ends(e)) == {5, nv[0]} for e in g.edge_ids)

    def test_subdivide_all_of_k5(self):
        g = complete(5)
        for e in list(g.edge_ids):
            g, _, _ = g.subdivide_edge(e, 1)
        assert g.num_vertices == 15 and g.num_edges == 20

    def test_unknown_edge(self):
        with pytest.raises(UnknownIdError):
            cycle(3).subdivide_edge(99, 1)


class TestContract:
    def test_square_to_triangle(self):
        g = cycle(4).contract_edge(0)
        assert g.num_vertices == 3 and g.num_edges == 3

    def test_parallel_pair_to_loop(self):
        g = Multigraph([0, 1], [(0, 0, 1), (1, 0, 1)]).contract_edge(0)
        assert g.num_vertices == 1
        assert [g.ends(e) for e in g.edge_ids] == [(0, 0)]

    def test_loop_rejected(self):
        with pytest.raises(LoopContractionError):
            Multigraph([0], [(0, 0, 0)]).contract_edge(0)

    def test_ladder_route_to_w_prime_counts(self):
        lg = ladder(4)
        g = lg.graph
        v1, v4 = lg.vertex("rail-v:1"), lg.vertex("rail-v:4")
        u1, u4 = lg.vertex("rail-u:1"), lg.vertex("rail-u:4")
        g = g.add_edge(g.next_edge_id(), v1, v4)
        g = g.contract_edge(edge_between(g, u1, v1))
        g = g.contract_edge(edge_between(g, u4, v4))
        assert (g.num_vertices, g.num_edges) == (6, 9)


class TestSeparations:
    def test_k4_has_none(self):
        assert enumerate_separations(complete(4), 3) == []

    def test_path(self):
        seps = enumerate_separations(Multigraph.from_pairs([(0, 1), (1, 2)]), 1)
        assert len(seps) == 1
        assert seps[0].side_a == {0, 1} and seps[0].side_b == {1, 2}

    def test_bowtie_cut_vertex(self):
        g = Multigraph.from_pairs([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        seps = enumerate_separations(g, 1)
        assert len(seps) == 1 and seps[0].order == 1

    def test_order_cap_guard(self):
        with pytest.raises(GraphError):
            enumerate_separations(complete(4), 4)
        assert enumerate_separations(complete(5), 4, order_cap=4) == []

    def test_every_reported_separation_checks(self):
        rng = random.Random(42)
        for _ in range(20):
            n = rng.randint(2, 8)
            m = rng.randint(0, 12)
            pairs = [
                (rng.randrange(n), rng.randrange(n)) for _ in range(m)
            ]
            g = Multigraph.from_pairs(pairs, extra_vertices=range(n))
            for sep in enumerate_separations(g, 3):
                assert sep.check(g)
                assert sep.is_nontrivial()

    def test_completeness_against_subset_scan(self):
        rng = random.Random(7)
        for _ in range(12):
            n = rng.randint(2, 7)
            m = rng.randint(0, 10)
            pairs = [
                (rng.randrange(n), rng.randrange(n)) for _ in range(m)
            ]
            g = Multigraph.from_pairs(pairs, extra_vertices=range(n))
            got = {
                (min(s.side_a, s.side_b, key=sorted), max(s.side_a, s.side_b, key=sorted))
                for s in enumerate_separations(g, 3)
            }
            want = separations_by_subsets(g, 3)
            assert got == want


class TestConnectivity:
    def test_k5_four_connected(self):
        assert is_k_connected(complete(5), 4)

    def test_mobius_three_connected(self):
        assert is_k_connected(mobius_ladder(4).graph, 3)

    def test_ladder_corners_fail(self):
        assert not is_k_connected(ladder(4).graph, 3)

    def test_small_graphs(self):
        assert not is_k_connected(Multigraph([0, 1], []), 1)
        assert is_k_connected(Multigraph([0, 1], [(0, 0, 1)]), 1)
        assert not is_k_connected(complete(3), 3)  # needs k+1 vertices

    def test_parallel_edges_do_not_help(self):
        g = Multigraph([0, 1, 2], [(0, 0, 1), (1, 0, 1), (2, 1, 2), (3, 1, 2)])
        assert not is_k_connected(g, 2)

    def test_agrees_with_subset_oracle(self):
        rng = random.Random(11)
        for _ in range(25):
            n = rng.randint(2, 8)
            m = rng.randint(1, 14)
            pairs = [
                (rng.randrange(n), rng.randrange(n)) for _ in range(m)
            ]
            g = Multigraph.from_pairs(pairs, extra_vertices=range(n))
            for k in (1, 2, 3, 4):
                expected = g.num_vertices >= k + 1 and vertex_cut_free(g, k)
                assert is_k_connected(g, k) == expected, (pairs, k)


class TestBlocks:
    def test_bowtie(self):
        g = Multigraph.from_pairs([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        bf = blocks(g)
        assert len(bf.blocks) == 2
        assert bf.cut_vertices == {0}
        assert all(b.is_end_block for b in bf.blocks)

    def test_tree_every_edge_a_block(self):
        g = Multigraph.from_pairs([(0, 1), (1, 2), (1, 3), (3, 4)])
        bf = blocks(g)
        assert len(bf.blocks) == 4
        assert all(b.is_bridge_edge() for b in bf.blocks)

    def test_cycle_single_block(self):
        bf = blocks(cycle(5))
        assert len(bf.blocks) == 1 and not bf.cut_vertices

    def test_loops_and_isolated(self):
        g = Multigraph([0, 1, 2], [(0, 0, 0), (1, 0, 1)])
        bf = blocks(g)
        kinds = sorted(
            (len(b.vertices), len(b.edge_ids)) for b in bf.blocks
        )
        assert kinds == [(1, 0), (1, 1), (2, 1)]

    @given(multigraphs())
    @settings(max_examples=60, deadline=None)
    def test_edge_partition_and_acyclic(self, g):
        bf = blocks(g)
        seen: set[int] = set()
        for b in bf.blocks:
            assert not (seen & b.edge_ids)
            seen |= b.edge_ids
        assert seen == set(g.edge_ids)
        # block graph acyclicity via union-find over (block, cut) incidences
        parent: dict = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for bi, cvs in bf.incidence.items():
            for cv in cvs:
                ra, rb = find(("b", bi)), find(("c", cv))
                assert ra != rb, "cycle in block graph"
                parent[ra] = rb


class TestProperties:
    @given(multigraphs())
    @settings(max_examples=60, deadline=None)
    def test_subdivide_then_suppress_roundtrip(self, g):
        if not g.edge_ids:
            return
        e = g.edge_ids[0]
        h, (nv,), _ = g.subdivide_edge(e, 1)
        back = h.suppress_vertex(nv)
        assert sorted(
            (min(u, v), max(u, v)) for _, u, v in back.edges()
        ) == sorted((min(u, v), max(u, v)) for _, u, v in g.edges())
        assert set(back.vertices) == set(g.vertices)

    @given(multigraphs(max_n=6, max_m=8))
    @settings(max_examples=40, deadline=None)
    def test_separations_valid(self, g):
        for sep in enumerate_separations(g, 2):
            assert sep.check(g)
