"""Planarity, embeddings, faces, ins(C), disk embeddings, peripheral cycles."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from crosscheck.errors import GraphError, NotACycleError
from crosscheck.exhaustive import disk_rotation_oracle, planarity_rotation_oracle
from crosscheck.families import (
    alt_double_wheel,
    circular_ladder,
    complete,
    complete_bipartite,
    cycle,
    wheel,
)
from crosscheck.multigraph import Multigraph
from crosscheck.planarity import (
    PlaneGraph,
    cycle_order,
    disk_embeddable,
    interior_edges,
    is_facial,
    is_peripheral,
    is_planar,
    planar_embedding,
)

from helpers import edge_between


def random_simple(rng, n, m):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    return Multigraph.from_pairs(
        sorted(rng.sample(pairs, min(m, len(pairs)))), extra_vertices=range(n)
    )


class TestPlanarity:
    def test_kuratowski(self):
        assert not is_planar(complete(5))
        assert not is_planar(complete_bipartite(3, 3))
        assert is_planar(complete(4))

    def test_multigraph_decorations_ignored(self):
        g = complete(4)
        g = g.add_edge(100, 0, 1).add_edge(101, 2, 2)
        assert is_planar(g)
        pg = planar_embedding(g)
        assert pg is not None

    def test_embedding_none_for_nonplanar(self):
        assert planar_embedding(complete(5)) is None

    def test_k4_faces(self):
        pg = planar_embedding(complete(4))
        assert len(pg.faces) == 4
        assert all(len(walk) == 3 for walk in pg.faces)

    def test_euler_disconnected(self):
        g = Multigraph.from_pairs([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        pg = planar_embedding(g)
        assert g.num_vertices - g.num_edges + pg.euler_f() == 1 + 2

    def test_invalid_rotation_rejected(self):
        g = complete(5)
        rotation = {
            v: tuple(
                (e, 0 if g.ends(e)[0] == v else 1) for e in g.incident_edges(v)
            )
            for v in g.vertices
        }
        with pytest.raises(GraphError):
            PlaneGraph(g, rotation)

    def test_agreement_with_rotation_oracle(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(3, 7)
            m = rng.randint(2, min(10, n * (n - 1) // 2))
            g = random_simple(rng, n, m)
            assert is_planar(g) == planarity_rotation_oracle(g)


class TestDiskEmbedding:
    def test_triangle_boundary(self):
        assert disk_embeddable(cycle(3), [0, 1, 2]) is not None

    def test_k33_color_class(self):
        assert disk_embeddable(complete_bipartite(3, 3), [0, 1, 2]) is None

    def test_k4_any_three(self):
        pg = disk_embeddable(complete(4), [0, 1, 2])
        assert pg is not None
        assert {0, 1, 2} <= pg.outer_vertices()

    def test_boundary_guards(self):
        with pytest.raises(GraphError):
            disk_embeddable(complete(4), [0, 0, 1])
        with pytest.raises(GraphError):
            disk_embeddable(complete(5), [0, 1, 2, 3])

    def test_agreement_with_rotation_oracle(self):
        rng = random.Random(5)
        checked = 0
        for _ in range(60):
            n = rng.randint(3, 7)
            m = rng.randint(2, min(9, n * (n - 1) // 2))
            g = random_simple(rng, n, m)
            k = rng.randint(1, 3)
            boundary = rng.sample(range(n), k)
            got = disk_embeddable(g, boundary) is not None
            want = disk_rotation_oracle(g, boundary)
            assert got == want, (sorted(g.edges()), boundary)
            checked += 1
        assert checked == 60

    def test_boundary_across_components(self):
        g = Multigraph.from_pairs([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        pg = disk_embeddable(g, [0, 3])
        assert pg is not None
        assert {0, 3} <= pg.outer_vertices()


class TestFaces:
    def test_rim_facial_when_outer(self):
        lg = wheel(4)
        g = lg.graph
        rim = [e for e, u, v in g.edges() if lg.vertex("hub") not in (u, v)]
        pg = planar_embedding(g).with_outer_face_containing([1, 2, 3, 4])
        assert is_facial(pg, rim)

    def test_hub_triangles_facial(self):
        lg = wheel(4)
        g = lg.graph
        hub = lg.vertex("hub")
        pg = planar_embedding(g).with_outer_face_containing([1, 2, 3, 4])
        for i in range(1, 5):
            j = i % 4 + 1
            tri = [
                edge_between(g, lg.vertex(f"rim:{i}"), lg.vertex(f"rim:{j}")),
                edge_between(g, hub, lg.vertex(f"rim:{i}")),
                edge_between(g, hub, lg.vertex(f"rim:{j}")),
            ]
            assert is_facial(pg, tri)

    def test_not_a_cycle_rejected(self):
        g = complete(4)
        pg = planar_embedding(g)
        with pytest.raises(NotACycleError):
            is_facial(pg, [0, 1])

    def test_two_connected_faces_are_cycles(self):
        rng = random.Random(9)
        found = 0
        for _ in range(40):
            n = rng.randint(4, 8)
            m = rng.randint(n, min(2 * n, n * (n - 1) // 2))
            g = random_simple(rng, n, m)
            from crosscheck.multigraph import is_k_connected

            if not is_k_connected(g, 2) or not is_planar(g):
                continue
            pg = planar_embedding(g)
            for i in range(len(pg.faces)):
                cycle_order(g, [d[0] for d in pg.faces[i]])
            found += 1
        assert found > 5


class TestInterior:
    def test_wheel_rim_interior(self):
        lg = wheel(4)
        g = lg.graph
        hub = lg.vertex("hub")
        rim = [e for e, u, v in g.edges() if hub not in (u, v)]
        pg = planar_embedding(g).with_outer_face_containing([1, 2, 3, 4])
        ins = interior_edges(pg, rim)
        spokes = {e for e, u, v in g.edges() if hub in (u, v)}
        assert ins.inside_edges == spokes
        assert ins.inside_vertices == {hub}

    def test_facial_cycle_empty(self):
        pg = planar_embedding(complete(4))
        face_edges = list(pg.face_edges(1))
        ins = interior_edges(pg, face_edges)
        assert not ins.inside_edges

    def test_circular_ladder_annulus(self):
        lg = circular_ladder(4)
        g = lg.graph
        outer_rail = [lg.vertex(f"rail-v:{i}") for i in range(1, 5)]
        inner_rail = [lg.vertex(f"rail-u:{i}") for i in range(1, 5)]
        outer_cycle = [
            edge_between(g, outer_rail[i], outer_rail[(i + 1) % 4]) for i in range(4)
        ]
        pg = planar_embedding(g).with_outer_face_containing(outer_rail)
        ins = interior_edges(pg, outer_cycle)
        rungs = {edge_between(g, outer_rail[i], inner_rail[i]) for i in range(4)}
        inner_cycle = {
            edge_between(g, inner_rail[i], inner_rail[(i + 1) % 4]) for i in range(4)
        }
        assert ins.inside_edges == rungs | inner_cycle
        assert ins.inside_vertices == set(inner_rail)

    def test_partition_property(self):
        # inside faces plus outside faces plus the cycle's edges cover all
        lg = circular_ladder(5)
        g = lg.graph
        outer_rail = [lg.vertex(f"rail-v:{i}") for i in range(1, 6)]
        outer_cycle = [
            edge_between(g, outer_rail[i], outer_rail[(i + 1) % 5]) for i in range(5)
        ]
        pg = planar_embedding(g).with_outer_face_containing(outer_rail)
        ins = interior_edges(pg, outer_cycle)
        outside = set(g.edge_ids) - ins.inside_edges - set(outer_cycle)
        assert ins.inside_edges | outside | set(outer_cycle) == set(g.edge_ids)
        for e in outside:
            assert e not in ins.inside_edges


class TestPeripheral:
    def test_k4_triangle(self):
        g = complete(4)
        tri = [e for e, u, v in g.edges() if 3 not in (u, v)]
        assert is_peripheral(g, tri)

    def test_k4_four_cycle_not_induced(self):
        g = complete(4)
        square = [
            edge_between(g, 0, 1),
            edge_between(g, 1, 2),
            edge_between(g, 2, 3),
            edge_between(g, 3, 0),
        ]
        assert not is_peripheral(g, square)

    def test_circular_ladder_rail(self):
        lg = circular_ladder(4)
        g = lg.graph
        rail = [lg.vertex(f"rail-u:{i}") for i in range(1, 5)]
        rail_cycle = [edge_between(g, rail[i], rail[(i + 1) % 4]) for i in range(4)]
        assert is_peripheral(g, rail_cycle)

    def test_disconnected_remainder(self):
        lg = alt_double_wheel(3)
        g = lg.graph
        rim = [lg.vertex(f"rim:{i}") for i in range(1, 7)]
        rim_cycle = [edge_between(g, rim[i], rim[(i + 1) % 6]) for i in range(6)]
        assert not is_peripheral(g, rim_cycle)  # hubs left disconnected
