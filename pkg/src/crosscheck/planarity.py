"""Planarity, combinatorial embeddings, faces, ins(C), disk embeddings.

Embeddings are rotation systems: for every vertex a cyclic order of its
incident darts.  A dart is ``(edge_id, end_index)`` and is based at
``ends(edge_id)[end_index]``; a loop contributes two darts at the same
vertex.  Faces are the orbits of ``d -> rotation-successor of reverse(d)``.
No coordinates anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .errors import GraphError, NotACycleError, UnknownIdError
from .multigraph import Multigraph

__all__ = [
    "Dart",
    "PlaneGraph",
    "CycleInterior",
    "cycle_order",
    "trace_faces",
    "expected_planar_face_count",
    "is_planar",
    "planar_embedding",
    "disk_embeddable",
    "is_facial",
    "interior_edges",
    "is_peripheral",
]

Dart = tuple[int, int]


def dart_base(g: Multigraph, d: Dart) -> int:
    return g.ends(d[0])[d[1]]


def darts_at(g: Multigraph) -> dict[int, list[Dart]]:
    """All darts grouped by base vertex, in (edge id, end) order."""
    out: dict[int, list[Dart]] = {v: [] for v in g.vertices}
    for eid, u, v in g.edges():
        out[u].append((eid, 0))
        out[v].append((eid, 1))
    for v in out:
        out[v].sort()
    return out


def cycle_order(g: Multigraph, edge_ids) -> tuple[list[int], list[int]]:
    """Check that edge_ids form one simple cycle; return (vertices, edges).

    The vertex list has the same length as the edge list: vertex i is the
    tail of edge i.  Loops (length 1) and parallel pairs (length 2) count
    as cycles.  Raises NotACycleError otherwise.
    """
    eids = list(dict.fromkeys(edge_ids))
    if len(eids) != len(list(edge_ids)) or not eids:
        raise NotACycleError("edge list empty or has repeats")
    if len(eids) == 1:
        e = eids[0]
        u, v = g.ends(e)
        if u != v:
            raise NotACycleError("a single non-loop edge is not a cycle")
        return [u], eids
    incid: dict[int, list[int]] = {}
    for e in eids:
        u, v = g.ends(e)
        if u == v:
            raise NotACycleError("loop inside a longer cycle")
        incid.setdefault(u, []).append(e)
        incid.setdefault(v, []).append(e)
    if any(len(es) != 2 for es in incid.values()) or len(incid) != len(eids):
        raise NotACycleError("edge set is not a single cycle")
    start = min(incid)
    verts = [start]
    edges = []
    cur = start
    prev_e = None
    while True:
        e1, e2 = incid[cur]
        nxt_e = e1 if e1 != prev_e else e2
        if prev_e is None:
            nxt_e = min(e1, e2)
        edges.append(nxt_e)
        cur = g.other_end(nxt_e, cur)
        prev_e = nxt_e
        if cur == start:
            break
        verts.append(cur)
    if len(edges) != len(eids):
        raise NotACycleError("edge set is not connected as a cycle")
    return verts, edges


def trace_faces(g: Multigraph, rotation: dict[int, tuple[Dart, ...]]) -> list[tuple[Dart, ...]]:
    """Orbits of the face permutation for the given rotation system."""
    succ: dict[Dart, Dart] = {}
    for v, ring in rotation.items():
        for i, d in enumerate(ring):
            succ[d] = ring[(i + 1) % len(ring)]
    faces = []
    seen: set[Dart] = set()
    for v in sorted(rotation):
        for d in rotation[v]:
            if d in seen:
                continue
            walk = []
            cur = d
            while cur not in seen:
                seen.add(cur)
                walk.append(cur)
                rev = (cur[0], 1 - cur[1])
                cur = succ[rev]
            faces.append(tuple(walk))
    return faces


def expected_planar_face_count(g: Multigraph) -> int:
    """Total face-orbit count of a genus-zero rotation, per edge component."""
    total = 0
    for comp in g.components():
        ecount = sum(
            1 for e, u, v in g.edges() if u in comp
        )
        if ecount:
            total += ecount - len(comp) + 2
    return total


class PlaneGraph:
    """A multigraph with a planar rotation system and designated outer face.

    For a disconnected graph the outer face is one orbit per edge-bearing
    component (all components share the unbounded region); Euler's formula
    then reads v - e + f = 1 + c with the outer counted once.
    """

    __slots__ = ("graph", "rotation", "faces", "outer", "_face_edges", "_face_vertices")

    def __init__(self, graph: Multigraph, rotation: dict[int, tuple[Dart, ...]], outer=None):
        expected = {v: tuple(sorted(ds)) for v, ds in darts_at(graph).items()}
        got = {v: tuple(sorted(rotation.get(v, ()))) for v in graph.vertices}
        if expected != got or set(rotation) - set(graph.vertices):
            raise GraphError("rotation does not match the graph's darts")
        self.graph = graph
        self.rotation = {v: tuple(rotation[v]) for v in sorted(rotation)}
        self.faces = tuple(trace_faces(graph, self.rotation))
        if len(self.faces) != expected_planar_face_count(graph):
            raise GraphError("rotation system is not planar (Euler check failed)")
        self._face_edges = tuple(
            frozenset(d[0] for d in walk) for walk in self.faces
        )
        self._face_vertices = tuple(
            frozenset(dart_base(graph, d) for d in walk) for walk in self.faces
        )
        if outer is None:
            outer = self._default_outer()
        outer = frozenset(outer)
        if not outer <= set(range(len(self.faces))):
            raise GraphError("outer face ids out of range")
        comps = self._edge_components()
        if len(outer) != len(comps):
            raise GraphError("outer must designate one face per edge component")
        for comp in comps:
            if sum(1 for i in outer if self._face_vertices[i] & comp) != 1:
                raise GraphError("outer must designate one face per edge component")
        self.outer = outer

    def _edge_components(self) -> list[frozenset[int]]:
        return [c for c in self.graph.components() if any(
            self.graph.incident_edges(v) for v in c
        )]

    def _default_outer(self):
        out = []
        for comp in self._edge_components():
            ids = [
                i for i, vs in enumerate(self._face_vertices) if vs & comp
            ]
            out.append(min(ids))
        return out

    # -- accessors --------------------------------------------------------

    def face_edges(self, i: int) -> frozenset[int]:
        return self._face_edges[i]

    def face_vertices(self, i: int) -> frozenset[int]:
        return self._face_vertices[i]

    def face_walk_vertices(self, i: int) -> tuple[int, ...]:
        return tuple(dart_base(self.graph, d) for d in self.faces[i])

    @property
    def outer_face(self) -> int:
        if len(self.outer) != 1:
            raise GraphError("graph has several edge components; outer is a set")
        return next(iter(self.outer))

    def outer_vertices(self) -> frozenset[int]:
        on_outer: set[int] = set()
        for i in self.outer:
            on_outer |= self._face_vertices[i]
        # vertices with no incident edges sit in the unbounded region
        for v in self.graph.vertices:
            if not self.graph.incident_edges(v):
                on_outer.add(v)
        return frozenset(on_outer)

    def euler_f(self) -> int:
        """Face count with the shared outer face counted once."""
        if not self.faces:
            return 1 if self.graph.num_vertices else 0
        return len(self.faces) - len(self.outer) + 1

    def with_outer_face_containing(self, vertices) -> "PlaneGraph":
        """Re-designate the outer face to one containing all given vertices.

        The vertices must lie in a single edge component; other components
        keep their current outer orbit.
        """
        want = set(vertices)
        cands = [
            i
            for i, vs in enumerate(self._face_vertices)
            if want <= vs
        ]
        if not cands:
            raise GraphError("no face contains all the given vertices")
        chosen = cands[0]
        comp_vs = self._face_vertices[chosen]
        new_outer = {chosen}
        for i in self.outer:
            # keep outer picks of other components
            if not self._component_of_face(i) & self._component_of_face(chosen):
                new_outer.add(i)
        return PlaneGraph(self.graph, self.rotation, new_outer)

    def _component_of_face(self, i: int) -> frozenset[int]:
        some_v = next(iter(self._face_vertices[i]))
        return self.graph.component_of(some_v)


# -- planarity ------------------------------------------------------------


def _nx_simple(g: Multigraph) -> nx.Graph:
    s = nx.Graph()
    s.add_nodes_from(g.vertices)
    for _, u, v in sorted(g.simplify().edges()):
        if u != v:
            s.add_edge(u, v)
    return s


def is_planar(g: Multigraph) -> bool:
    """Loops and parallel edges never affect planarity."""
    s = g.simplify()
    n, m = s.num_vertices, s.num_edges
    if n <= 4 or m <= 8:
        return True  # the smallest non-planar graph has 9 edges
    if m > 3 * n - 6:
        return False
    ok, _ = nx.check_planarity(_nx_simple(g), counterexample=False)
    return ok


def planar_embedding(g: Multigraph) -> PlaneGraph | None:
    """A planar rotation system with a deterministic outer face, or None.

    Parallel edges are inserted next to their class siblings (forming
    2-gon faces) and loops as consecutive dart pairs (forming 1-gon
    faces), so multigraphs embed whenever their simplification does.
    """
    ok, emb = nx.check_planarity(_nx_simple(g), counterexample=False)
    if not ok:
        return None
    data = emb.get_data()
    # collate parallel classes and loops
    between: dict[tuple[int, int], list[int]] = {}
    loops: dict[int, list[int]] = {v: [] for v in g.vertices}
    for eid, u, v in g.edges():
        if u == v:
            loops[u].append(eid)
        else:
            between.setdefault((min(u, v), max(u, v)), []).append(eid)
    for es in between.values():
        es.sort()
    rotation: dict[int, tuple[Dart, ...]] = {}
    for v in g.vertices:
        ring: list[Dart] = []
        for u in data.get(v, []):
            for eid in between[(min(u, v), max(u, v))]:
                end = 0 if g.ends(eid)[0] == v else 1
                ring.append((eid, end))
        for eid in sorted(loops[v]):
            ring.append((eid, 0))
            ring.append((eid, 1))
        rotation[v] = tuple(ring)
    return PlaneGraph(g, rotation)


def disk_embeddable(g: Multigraph, boundary) -> PlaneGraph | None:
    """Embedding with all boundary vertices on the outer face, or None.

    Apex reduction: g is disk-embeddable with boundary S iff g plus a new
    vertex adjacent to all of S is planar.  At most three boundary
    vertices are supported (their cyclic order is then immaterial).
    """
    boundary = list(boundary)
    if len(set(boundary)) != len(boundary):
        raise GraphError("boundary vertices must be distinct")
    if len(boundary) > 3:
        raise GraphError("at most three boundary vertices are supported")
    for v in boundary:
        if not g.has_vertex(v):
            raise UnknownIdError(f"unknown vertex id {v}")
    if not boundary:
        return planar_embedding(g)
    apex = g.next_vertex_id()
    aug = g.add_vertex(apex)
    ne = g.next_edge_id()
    apex_edges = []
    for i, v in enumerate(boundary):
        aug = aug.add_edge(ne + i, apex, v)
        apex_edges.append(ne + i)
    pe = planar_embedding(aug)
    if pe is None:
        return None
    drop = set(apex_edges)
    rotation = {
        v: tuple(d for d in ring if d[0] not in drop)
        for v, ring in pe.rotation.items()
        if v != apex
    }
    interim = PlaneGraph(g, rotation)
    # components holding boundary vertices must expose them on one face
    outer = set(interim._default_outer())
    for comp in interim._edge_components():
        want = comp & set(boundary)
        if not want:
            continue
        cands = [
            i
            for i, vs in enumerate(interim._face_vertices)
            if want <= vs and vs & comp
        ]
        if not cands:
            raise GraphError("apex removal did not expose the boundary face")
        for i in list(outer):
            if interim._face_vertices[i] & comp:
                outer.discard(i)
        outer.add(cands[0])
    return PlaneGraph(g, rotation, outer)


# -- faces, ins(C), peripheral cycles --------------------------------------


def is_facial(pg: PlaneGraph, cycle_edges) -> bool:
    """True iff the cycle's edge set equals some face's edge set."""
    _, eids = cycle_order(pg.graph, cycle_edges)
    eset = frozenset(eids)
    return any(eset == fe for fe in pg._face_edges)


@dataclass(frozen=True)
class CycleInterior:
    """ins(C): what lies strictly inside the disk bounded by a cycle."""

    cycle_edges: tuple[int, ...]
    inside_edges: frozenset[int]
    inside_vertices: frozenset[int]
    inside_faces: frozenset[int]


def interior_edges(pg: PlaneGraph, cycle_edges) -> CycleInterior:
    """Edges embedded in the open disk bounded by the cycle.

    A face is inside iff it cannot reach the outer face in the dual graph
    without crossing the cycle.  An edge is inside iff its faces are; its
    endpoints may lie on the cycle (edges do not include their ends).
    """
    verts, eids = cycle_order(pg.graph, cycle_edges)
    eset = set(eids)
    # dual adjacency via shared non-cycle edges
    edge_faces: dict[int, list[int]] = {}
    for i, fe in enumerate(pg._face_edges):
        for e in fe:
            edge_faces.setdefault(e, []).append(i)
    # a bridge edge has one face on both sides; record it twice
    for i, walk in enumerate(pg.faces):
        counts: dict[int, int] = {}
        for d in walk:
            counts[d[0]] = counts.get(d[0], 0) + 1
        for e, c in counts.items():
            if c == 2 and edge_faces[e] == [i]:
                edge_faces[e] = [i, i]
    reach = set(pg.outer)
    frontier = list(pg.outer)
    while frontier:
        f = frontier.pop()
        for e in pg._face_edges[f]:
            if e in eset:
                continue
            for f2 in edge_faces[e]:
                if f2 not in reach:
                    reach.add(f2)
                    frontier.append(f2)
    inside_faces = frozenset(i for i in range(len(pg.faces)) if i not in reach)
    inside_edges = set()
    for e in pg.graph.edge_ids:
        if e in eset:
            continue
        fs = edge_faces.get(e, [])
        if fs and all(f in inside_faces for f in fs):
            inside_edges.add(e)
    inside_vertices = set()
    for i in inside_faces:
        inside_vertices |= pg._face_vertices[i]
    inside_vertices -= set(verts)
    return CycleInterior(
        tuple(eids), frozenset(inside_edges), frozenset(inside_vertices), inside_faces
    )


def is_peripheral(g: Multigraph, cycle_edges) -> bool:
    """Induced cycle whose vertex deletion leaves a connected graph."""
    verts, eids = cycle_order(g, cycle_edges)
    vset = set(verts)
    induced_edges = [
        e for e, u, v in g.edges() if u in vset and v in vset
    ]
    if set(induced_edges) != set(eids):
        return False
    rest = [v for v in g.vertices if v not in vset]
    if not rest:
        return True
    comp = g.component_of(rest[0], forbidden_vertices=vset)
    return len(comp) == len(rest)
