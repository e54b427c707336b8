"""Immutable multigraph with stable integer ids, plus separations and blocks.

Vertices and edges are identified by integers.  Loops and parallel edges
are permitted.  All editing operations return new graphs; ids of untouched
elements are preserved, so deleting one element never renumbers another.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .errors import GraphError, LoopContractionError, UnknownIdError

__all__ = [
    "Multigraph",
    "Separation",
    "Block",
    "BlockForest",
    "enumerate_separations",
    "is_k_connected",
    "vertex_connectivity_at_least",
    "blocks",
]


class Multigraph:
    """A finite undirected multigraph.

    Construction takes an iterable of vertex ids and an iterable of
    ``(edge_id, u, v)`` triples.  ``u == v`` makes a loop; several edges
    may share the same endpoint pair.
    """

    __slots__ = ("_vertices", "_edges", "_incident", "_neighbors")

    def __init__(self, vertices, edges=()):
        vs = sorted(set(vertices))
        ed: dict[int, tuple[int, int]] = {}
        for eid, u, v in edges:
            if eid in ed:
                raise GraphError(f"duplicate edge id {eid}")
            ed[eid] = (u, v)
        vset = set(vs)
        for eid, (u, v) in ed.items():
            if u not in vset or v not in vset:
                raise UnknownIdError(f"edge {eid} has endpoint outside vertex set")
        self._vertices: tuple[int, ...] = tuple(vs)
        self._edges: dict[int, tuple[int, int]] = dict(sorted(ed.items()))
        inc: dict[int, list[int]] = {v: [] for v in vs}
        nbr: dict[int, set[int]] = {v: set() for v in vs}
        for eid, (u, v) in self._edges.items():
            inc[u].append(eid)
            if v != u:
                inc[v].append(eid)
                nbr[u].add(v)
                nbr[v].add(u)
        self._incident = {v: tuple(sorted(es)) for v, es in inc.items()}
        self._neighbors = {v: frozenset(ns) for v, ns in nbr.items()}

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_pairs(cls, pairs, extra_vertices=()) -> "Multigraph":
        """Build from ``(u, v)`` pairs; edge ids are assigned 0, 1, ..."""
        pairs = list(pairs)
        verts = set(extra_vertices)
        for u, v in pairs:
            verts.add(u)
            verts.add(v)
        return cls(verts, [(i, u, v) for i, (u, v) in enumerate(pairs)])

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(self._edges)

    def edges(self):
        """Iterate ``(eid, u, v)`` in edge-id order."""
        for eid, (u, v) in self._edges.items():
            yield eid, u, v

    def ends(self, eid: int) -> tuple[int, int]:
        try:
            return self._edges[eid]
        except KeyError:
            raise UnknownIdError(f"unknown edge id {eid}") from None

    def has_vertex(self, v: int) -> bool:
        return v in self._neighbors

    def has_edge(self, eid: int) -> bool:
        return eid in self._edges

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Edge ids incident with v; a loop appears once."""
        try:
            return self._incident[v]
        except KeyError:
            raise UnknownIdError(f"unknown vertex id {v}") from None

    def degree(self, v: int) -> int:
        """Raw degree; each loop contributes two."""
        d = 0
        for eid in self.incident_edges(v):
            a, b = self._edges[eid]
            d += 2 if a == b else 1
        return d

    def neighbors(self, v: int) -> frozenset[int]:
        """Distinct neighbors of v, excluding v itself (loops ignored)."""
        try:
            return self._neighbors[v]
        except KeyError:
            raise UnknownIdError(f"unknown vertex id {v}") from None

    def is_loop(self, eid: int) -> bool:
        u, v = self.ends(eid)
        return u == v

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.ends(eid)
        if v == u:
            return w
        if v == w:
            return u
        raise UnknownIdError(f"vertex {v} not an end of edge {eid}")

    def parallel_class(self, eid: int) -> tuple[int, ...]:
        """All edge ids sharing both endpoints with eid (including itself)."""
        u, v = self.ends(eid)
        key = (min(u, v), max(u, v))
        return tuple(
            f for f, (a, b) in self._edges.items() if (min(a, b), max(a, b)) == key
        )

    def edges_between(self, a, b) -> tuple[int, ...]:
        """Edge ids with one end in vertex set a and the other in b (disjoint sets)."""
        a = set(a)
        b = set(b)
        out = []
        for eid, (u, v) in self._edges.items():
            if (u in a and v in b) or (u in b and v in a):
                out.append(eid)
        return tuple(out)

    def next_vertex_id(self) -> int:
        return max(self._vertices, default=-1) + 1

    def next_edge_id(self) -> int:
        return max(self._edges, default=-1) + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self._edges.items())))

    def __repr__(self) -> str:
        return f"Multigraph({self.num_vertices} vertices, {self.num_edges} edges)"

    # -- connectivity ----------------------------------------------------

    def component_of(self, v: int, forbidden_vertices=(), forbidden_edges=()) -> frozenset[int]:
        """Vertices reachable from v avoiding the given vertices/edges."""
        bad_v = set(forbidden_vertices)
        bad_e = set(forbidden_edges)
        if v in bad_v:
            return frozenset()
        seen = {v}
        queue = deque([v])
        while queue:
            cur = queue.popleft()
            for eid in self._incident[cur]:
                if eid in bad_e:
                    continue
                w = self.other_end(eid, cur)
                if w not in seen and w not in bad_v:
                    seen.add(w)
                    queue.append(w)
        return frozenset(seen)

    def components(self, forbidden_vertices=(), forbidden_edges=()) -> list[frozenset[int]]:
        bad_v = set(forbidden_vertices)
        out = []
        remaining = [v for v in self._vertices if v not in bad_v]
        seen: set[int] = set()
        for v in remaining:
            if v in seen:
                continue
            comp = self.component_of(v, bad_v, forbidden_edges)
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        if self.num_vertices <= 1:
            return True
        return len(self.component_of(self._vertices[0])) == self.num_vertices

    # -- editing (all return new graphs) ---------------------------------

    def add_vertex(self, v: int) -> "Multigraph":
        if v in self._neighbors:
            raise GraphError(f"vertex {v} already present")
        return Multigraph(self._vertices + (v,), list(self.edges()))

    def add_edge(self, eid: int, u: int, v: int) -> "Multigraph":
        if u not in self._neighbors or v not in self._neighbors:
            raise UnknownIdError("endpoint not in graph")
        return Multigraph(self._vertices, list(self.edges()) + [(eid, u, v)])

    def delete_edges(self, eids) -> "Multigraph":
        eids = set(eids)
        for e in eids:
            if e not in self._edges:
                raise UnknownIdError(f"unknown edge id {e}")
        return Multigraph(
            self._vertices, [(e, u, v) for e, u, v in self.edges() if e not in eids]
        )

    def delete_edge(self, eid: int) -> "Multigraph":
        return self.delete_edges([eid])

    def delete_vertices(self, vs) -> "Multigraph":
        vs = set(vs)
        for v in vs:
            if v not in self._neighbors:
                raise UnknownIdError(f"unknown vertex id {v}")
        return Multigraph(
            (v for v in self._vertices if v not in vs),
            [(e, u, w) for e, u, w in self.edges() if u not in vs and w not in vs],
        )

    def delete_vertex(self, v: int) -> "Multigraph":
        return self.delete_vertices([v])

    def restrict(self, vertex_set) -> "Multigraph":
        """Induced subgraph on the given vertices; ids preserved."""
        a = set(vertex_set)
        for v in a:
            if v not in self._neighbors:
                raise UnknownIdError(f"unknown vertex id {v}")
        return Multigraph(
            a, [(e, u, w) for e, u, w in self.edges() if u in a and w in a]
        )

    def subgraph_of_edges(self, eids) -> "Multigraph":
        """Subgraph consisting of the given edges and their endpoints."""
        eids = sorted(set(eids))
        verts = set()
        triples = []
        for e in eids:
            u, v = self.ends(e)
            verts.add(u)
            verts.add(v)
            triples.append((e, u, v))
        return Multigraph(verts, triples)

    def subdivide_edge(self, eid: int, times: int = 1):
        """Replace eid by a path with `times` new internal vertices.

        Returns ``(graph, new_vertex_ids, new_edge_ids)``.  The new path
        reuses eid for its first edge and fresh ids for the rest.
        """
        if times < 1:
            raise GraphError("times must be >= 1")
        u, v = self.ends(eid)
        nv = self.next_vertex_id()
        ne = self.next_edge_id()
        new_vertices = list(range(nv, nv + times))
        new_edges = list(range(ne, ne + times))
        chain = [u] + new_vertices + [v]
        triples = [(e, a, b) for e, a, b in self.edges() if e != eid]
        path_ids = [eid] + new_edges
        for i, (a, b) in enumerate(itertools.pairwise(chain)):
            triples.append((path_ids[i], a, b))
        g = Multigraph(self._vertices + tuple(new_vertices), triples)
        return g, new_vertices, new_edges

    def contract_edge(self, eid: int) -> "Multigraph":
        """Contract a non-loop edge; the merged vertex keeps the smaller id.

        Parallel copies of eid become loops; all other edges are retained.
        """
        u, v = self.ends(eid)
        if u == v:
            raise LoopContractionError(f"edge {eid} is a loop")
        keep, gone = min(u, v), max(u, v)
        triples = []
        for e, a, b in self.edges():
            if e == eid:
                continue
            a2 = keep if a == gone else a
            b2 = keep if b == gone else b
            triples.append((e, a2, b2))
        return Multigraph((w for w in self._vertices if w != gone), triples)

    def suppress_vertex(self, v: int) -> "Multigraph":
        """Remove a degree-2 vertex, joining its two distinct incident edges.

        The surviving edge keeps the smaller of the two edge ids.  Not
        applicable to a vertex carrying a loop.
        """
        inc = self.incident_edges(v)
        if self.degree(v) != 2 or len(inc) != 2:
            raise GraphError(f"vertex {v} is not suppressible")
        e1, e2 = inc
        a = self.other_end(e1, v)
        b = self.other_end(e2, v)
        keep = min(e1, e2)
        triples = [(e, x, y) for e, x, y in self.edges() if e not in (e1, e2)]
        triples.append((keep, a, b))
        return Multigraph((w for w in self._vertices if w != v), triples)

    def simplify(self) -> "Multigraph":
        """Underlying simple graph: drop loops, collapse parallel classes.

        Each parallel class keeps its smallest edge id.
        """
        seen: dict[tuple[int, int], int] = {}
        for e, u, v in self.edges():
            if u == v:
                continue
            key = (min(u, v), max(u, v))
            if key not in seen:
                seen[key] = e
        return Multigraph(
            self._vertices, [(e, u, v) for (u, v), e in seen.items()]
        )


# -- separations ---------------------------------------------------------


@dataclass(frozen=True)
class Separation:
    """An ordered pair (A, B) of vertex sets covering V with no cross edge."""

    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.side_a & self.side_b)

    @property
    def middle(self) -> frozenset[int]:
        return self.side_a & self.side_b

    def is_nontrivial(self) -> bool:
        return bool(self.side_a - self.side_b) and bool(self.side_b - self.side_a)

    def check(self, g: Multigraph) -> bool:
        """Direct scan of the defining conditions against g."""
        if self.side_a | self.side_b != set(g.vertices):
            return False
        only_a = self.side_a - self.side_b
        only_b = self.side_b - self.side_a
        for _, u, v in g.edges():
            if (u in only_a and v in only_b) or (u in only_b and v in only_a):
                return False
        return True


def _canonical_sides(a: frozenset[int], b: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    # side_a lexicographically minimal, to report each separation once
    ka, kb = sorted(a), sorted(b)
    return (a, b) if ka <= kb else (b, a)


def enumerate_separations(
    g: Multigraph, max_order: int, *, order_cap: int = 3
) -> list[Separation]:
    """All nontrivial separations of order <= max_order, up to swapping sides.

    Enumerates every vertex set S with |S| <= max_order and every
    2-partition of the components of G - S into two nonempty groups.
    The default cap of 3 guards against combinatorial blowup; raise
    order_cap explicitly to go higher.
    """
    if max_order > order_cap:
        raise GraphError(
            f"max_order {max_order} exceeds cap {order_cap}; pass order_cap to override"
        )
    out: list[Separation] = []
    verts = g.vertices
    for size in range(0, max_order + 1):
        for s in itertools.combinations(verts, size):
            sset = set(s)
            comps = g.components(forbidden_vertices=sset)
            if len(comps) < 2:
                continue
            # all 2-partitions into nonempty groups; fix comps[0]'s side
            rest = comps[1:]
            for mask in range(len(rest) + 1):
                for group in itertools.combinations(rest, mask):
                    side1 = set(comps[0])
                    for c in group:
                        side1 |= c
                    side2 = set()
                    for c in rest:
                        if c not in group:
                            side2 |= c
                    if not side2:
                        continue
                    a = frozenset(side1 | sset)
                    b = frozenset(side2 | sset)
                    a, b = _canonical_sides(a, b)
                    out.append(Separation(a, b))
    out.sort(key=lambda sep: (sep.order, sorted(sep.side_a), sorted(sep.side_b)))
    return out


# -- vertex connectivity -------------------------------------------------


def _vertex_flow_at_least(g: Multigraph, s: int, t: int, k: int) -> bool:
    """At least k internally disjoint s-t paths (vertex version, Menger)."""
    # unit-capacity flow on the split network; loops and edge multiplicity
    # are irrelevant to vertex connectivity
    n_in: dict[int, int] = {}
    n_out: dict[int, int] = {}
    nxt = 0
    for v in g.vertices:
        n_in[v] = nxt
        n_out[v] = nxt + 1
        nxt += 2
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, set[int]] = {i: set() for i in range(nxt)}

    def add(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        adj[a].add(b)
        adj[b].add(a)

    big = len(g.vertices) + 1
    for v in g.vertices:
        add(n_in[v], n_out[v], big if v in (s, t) else 1)
    for v in g.vertices:
        for w in g.neighbors(v):
            if v < w:
                add(n_out[v], n_in[w], big)
                add(n_out[w], n_in[v], big)
    src, dst = n_out[s], n_in[t]
    flow = 0
    while flow < k:
        parent = {src: src}
        queue = deque([src])
        while queue and dst not in parent:
            cur = queue.popleft()
            for nb in adj[cur]:
                if nb not in parent and cap.get((cur, nb), 0) > 0:
                    parent[nb] = cur
                    queue.append(nb)
        if dst not in parent:
            return False
        node = dst
        while node != src:
            prev = parent[node]
            cap[(prev, node)] -= 1
            cap[(node, prev)] += 1
            node = prev
        flow += 1
    return True


def vertex_connectivity_at_least(g: Multigraph, k: int) -> bool:
    """True iff g has no vertex cut of size < k (and is connected).

    Uses max-flow on the vertex-split network over nonadjacent pairs.
    """
    if k <= 0:
        return True
    if not g.is_connected():
        return False
    n = g.num_vertices
    verts = g.vertices
    checked_any = False
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if v in g.neighbors(u):
                continue
            checked_any = True
            if not _vertex_flow_at_least(g, u, v, k):
                return False
    if not checked_any:
        # no nonadjacent pair: connectivity is n - 1
        return n - 1 >= k
    return True


def is_k_connected(g: Multigraph, k: int) -> bool:
    """k-connectivity for k <= 4; loops and parallel edges add nothing."""
    if g.num_vertices < k + 1:
        return False
    if not g.is_connected():
        return False
    return vertex_connectivity_at_least(g, k)


# -- blocks --------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """One block: a maximal 2-connected subgraph, a bridge, or a vertex."""

    vertices: frozenset[int]
    edge_ids: frozenset[int]
    is_end_block: bool = False

    def is_bridge_edge(self) -> bool:
        return len(self.edge_ids) == 1 and len(self.vertices) == 2


@dataclass
class BlockForest:
    blocks: list[Block]
    cut_vertices: frozenset[int]
    # incidence: block index -> cut vertices it contains
    incidence: dict[int, frozenset[int]] = field(default_factory=dict)

    def block_graph_edges(self) -> list[tuple[int, int]]:
        """Edges of the block graph as (block index, cut vertex) pairs."""
        out = []
        for bi, cvs in self.incidence.items():
            for cv in sorted(cvs):
                out.append((bi, cv))
        return out

    def block_graph_degree(self, bi: int) -> int:
        return len(self.incidence.get(bi, ()))


def blocks(g: Multigraph) -> BlockForest:
    """Block/cut-vertex decomposition.

    Loops form their own single-edge blocks.  Isolated vertices become
    vertex-only blocks.  End-blocks (degree one in the block graph) are
    flagged; an isolated block (degree zero) is not an end-block.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    timer = itertools.count()
    stack: list[int] = []  # edge ids
    comp_edges: list[frozenset[int]] = []
    cut: set[int] = set()

    for root in g.vertices:
        if root in disc:
            continue
        # iterative DFS
        disc[root] = low[root] = next(timer)
        root_children = 0
        work: list[tuple[int, int | None, list[int]]] = [
            (root, None, [e for e in g.incident_edges(root) if not g.is_loop(e)])
        ]
        while work:
            v, pe, todo = work[-1]
            if todo:
                eid = todo.pop()
                if eid == pe:
                    continue
                w = g.other_end(eid, v)
                if w not in disc:
                    stack.append(eid)
                    disc[w] = low[w] = next(timer)
                    if v == root:
                        root_children += 1
                    work.append(
                        (w, eid, [e for e in g.incident_edges(w) if not g.is_loop(e)])
                    )
                elif disc[w] < disc[v]:
                    stack.append(eid)
                    low[v] = min(low[v], disc[w])
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        # u is a cut vertex (or the root); pop one block
                        grp = []
                        while stack:
                            top = stack[-1]
                            a, b = g.ends(top)
                            if max(disc[a], disc[b]) >= disc[v]:
                                grp.append(stack.pop())
                            else:
                                break
                        if grp:
                            comp_edges.append(frozenset(grp))
                        if u != root or root_children > 1:
                            cut.add(u)

    # loops: one block each
    for e, u, v in g.edges():
        if u == v:
            comp_edges.append(frozenset([e]))

    blks: list[Block] = []
    covered: set[int] = set()
    for grp in comp_edges:
        vs = set()
        for e in grp:
            u, v = g.ends(e)
            vs.add(u)
            vs.add(v)
        covered |= vs
        blks.append(Block(frozenset(vs), grp))
    for v in g.vertices:
        if v not in covered:
            blks.append(Block(frozenset([v]), frozenset()))

    blks.sort(key=lambda b: (sorted(b.vertices), sorted(b.edge_ids)))
    incidence = {
        i: frozenset(b.vertices & cut) for i, b in enumerate(blks)
    }
    final = [
        Block(b.vertices, b.edge_ids, is_end_block=(len(incidence[i]) == 1))
        for i, b in enumerate(blks)
    ]
    return BlockForest(final, frozenset(cut), incidence)
