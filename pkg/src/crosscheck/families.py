"""Deterministic generators for the named graph families.

Every generator returns a LabeledGraph: the multigraph plus a partial
vertex-labelling naming the distinguished vertices (hubs, rails, rim
positions).  Rim indices are 1-based and index arithmetic is modulo the
rim length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphError
from .multigraph import Multigraph

__all__ = [
    "LabeledGraph",
    "wheel",
    "alt_double_wheel",
    "b_graph",
    "ladder",
    "w_prime",
    "circular_ladder",
    "mobius_ladder",
    "k4k",
    "k4k_split",
    "k3k",
    "cycle_with_distance_k_chords",
    "cycle_plus_two_hubs",
    "a4_gadget",
    "complete",
    "complete_bipartite",
    "cycle",
    "path_graph",
]


@dataclass
class LabeledGraph:
    graph: Multigraph
    labels: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        for v in self.labels:
            if not self.graph.has_vertex(v):
                raise GraphError(f"label references missing vertex {v}")

    def vertex(self, label: str) -> int:
        for v, lab in self.labels.items():
            if lab == label:
                return v
        raise GraphError(f"no vertex labeled {label!r}")

    def vertices_with_prefix(self, prefix: str) -> list[int]:
        return sorted(v for v, lab in self.labels.items() if lab.startswith(prefix))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


# -- plain helpers ----------------------------------------------------------


def complete(n: int) -> Multigraph:
    return Multigraph.from_pairs(
        [(a, b) for a in range(n) for b in range(a + 1, n)], extra_vertices=range(n)
    )


def complete_bipartite(m: int, n: int) -> Multigraph:
    return Multigraph.from_pairs(
        [(a, m + b) for a in range(m) for b in range(n)],
        extra_vertices=range(m + n),
    )


def cycle(n: int) -> Multigraph:
    _require(n >= 1, "cycle needs n >= 1")
    if n == 1:
        return Multigraph([0], [(0, 0, 0)])
    return Multigraph.from_pairs([(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Multigraph:
    _require(n >= 1, "path needs n >= 1")
    return Multigraph.from_pairs(
        [(i, i + 1) for i in range(n - 1)], extra_vertices=range(n)
    )


# -- wheels -----------------------------------------------------------------


def wheel(k: int) -> LabeledGraph:
    """Hub plus a k-cycle rim; every rim vertex sees the hub."""
    _require(k >= 3, "wheel needs k >= 3")
    rim = list(range(1, k + 1))
    pairs = [(rim[i], rim[(i + 1) % k]) for i in range(k)]
    pairs += [(0, r) for r in rim]
    labels = {0: "hub"}
    labels.update({r: f"rim:{i+1}" for i, r in enumerate(rim)})
    return LabeledGraph(Multigraph.from_pairs(pairs), labels)


def alt_double_wheel(k: int) -> LabeledGraph:
    """Rim of length 2k with two hubs on alternating spokes.

    Hub 0 sees the odd rim positions, hub 0' the even ones.
    """
    _require(k >= 2, "alternating double wheel needs k >= 2")
    rim = list(range(2, 2 * k + 2))  # rim position i (1-based) -> vertex i + 1
    pairs = [(rim[i], rim[(i + 1) % (2 * k)]) for i in range(2 * k)]
    pairs += [(0, rim[i]) for i in range(0, 2 * k, 2)]  # odd positions
    pairs += [(1, rim[i]) for i in range(1, 2 * k, 2)]  # even positions
    labels = {0: "hub0", 1: "hub0'"}
    labels.update({r: f"rim:{i+1}" for i, r in enumerate(rim)})
    return LabeledGraph(Multigraph.from_pairs(pairs), labels)


def b_graph(k: int) -> LabeledGraph:
    """Alternating double wheel with its hubs joined by an edge."""
    adw = alt_double_wheel(k)
    g = adw.graph
    return LabeledGraph(g.add_edge(g.next_edge_id(), 0, 1), dict(adw.labels))


# -- ladders ----------------------------------------------------------------


def _ladder_ids(k: int) -> tuple[list[int], list[int]]:
    return list(range(1, k + 1)), list(range(k + 1, 2 * k + 1))


def ladder(k: int) -> LabeledGraph:
    """Two k-vertex rails joined by k rungs."""
    _require(k >= 1, "ladder needs k >= 1")
    vs, us = _ladder_ids(k)
    pairs = [(vs[i], vs[i + 1]) for i in range(k - 1)]
    pairs += [(us[i], us[i + 1]) for i in range(k - 1)]
    pairs += [(vs[i], us[i]) for i in range(k)]
    labels = {v: f"rail-v:{i+1}" for i, v in enumerate(vs)}
    labels.update({u: f"rail-u:{i+1}" for i, u in enumerate(us)})
    return LabeledGraph(Multigraph.from_pairs(pairs), labels)


def w_prime(k: int) -> LabeledGraph:
    """Ladder with the v-rail closed into a cycle and its end rungs contracted.

    Built directly: two end vertices joined to each other and to both
    rails, rungs on the interior only.
    """
    _require(k >= 3, "w_prime needs k >= 3")
    end1, endk = 1, k
    vs = list(range(2, k))  # interior v-rail: positions 2..k-1
    us = list(range(k + 1, 2 * k - 1))  # interior u-rail
    pairs = []
    vchain = [end1] + vs + [endk]
    uchain = [end1] + us + [endk]
    pairs += [(vchain[i], vchain[i + 1]) for i in range(len(vchain) - 1)]
    pairs += [(uchain[i], uchain[i + 1]) for i in range(len(uchain) - 1)]
    pairs += [(vs[i], us[i]) for i in range(len(vs))]
    pairs.append((end1, endk))
    labels = {end1: "end:1", endk: f"end:{k}"}
    labels.update({v: f"rail-v:{i+2}" for i, v in enumerate(vs)})
    labels.update({u: f"rail-u:{i+2}" for i, u in enumerate(us)})
    return LabeledGraph(Multigraph.from_pairs(pairs), labels)


def circular_ladder(k: int) -> LabeledGraph:
    """Ladder with both rails closed into cycles."""
    _require(k >= 3, "circular ladder needs k >= 3")
    lad = ladder(k)
    vs, us = _ladder_ids(k)
    g = lad.graph
    g = g.add_edge(g.next_edge_id(), vs[0], vs[-1])
    g = g.add_edge(g.next_edge_id(), us[0], us[-1])
    return LabeledGraph(g, dict(lad.labels))


def mobius_ladder(k: int) -> LabeledGraph:
    """Ladder closed up with the two cross edges."""
    _require(k >= 3, "mobius ladder needs k >= 3")
    lad = ladder(k)
    vs, us = _ladder_ids(k)
    g = lad.graph
    g = g.add_edge(g.next_edge_id(), vs[0], us[-1])
    g = g.add_edge(g.next_edge_id(), us[0], vs[-1])
    return LabeledGraph(g, dict(lad.labels))


# -- complete-bipartite shapes ------------------------------------------------


def k4k(k: int) -> LabeledGraph:
    """Four vertices joined to each of k independent vertices."""
    _require(k >= 1, "k4k needs k >= 1")
    left = [0, 1, 2, 3]
    right = list(range(4, 4 + k))
    pairs = [(a, b) for b in right for a in left]
    labels = {0: "x", 1: "y", 2: "x'", 3: "y'"}
    labels.update({r: f"v:{i+1}" for i, r in enumerate(right)})
    return LabeledGraph(Multigraph.from_pairs(pairs), labels)


def k4k_split(k: int) -> LabeledGraph:
    """k4k with every degree-4 vertex split into an adjacent pair.

    Vertex v_i is adjacent to v'_i, x and y; v'_i to v_i, x' and y'.
    """
    _require(k >= 1, "k4k_split needs k >= 1")
    x, y, xp, yp = 0, 1, 2, 3
    v = list(range(4, 4 + k))
    vp = list(range(4 + k, 4 + 2 * k))
    pairs = []
    for i in range(k):
        pairs += [(v[i], vp[i]), (v[i], x), (v[i], y), (vp[i], xp), (vp[i], yp)]
    labels = {x: "x", y: "y", xp: "x'", yp: "y'"}
    labels.update({v[i]: f"v:{i+1}" for i in range(k)})
    labels.update({vp[i]: f"v':{i+1}" for i in range(k)})
    return LabeledGraph(Multigraph.from_pairs(pairs), labels)


def k3k(k: int) -> LabeledGraph:
    """Complete bipartite graph with one side of three vertices."""
    _require(k >= 1, "k3k needs k >= 1")
    g = complete_bipartite(3, k)
    labels = {0: "x", 1: "y", 2: "z"}
    labels.update({3 + i: f"v:{i+1}" for i in range(k)})
    return LabeledGraph(g, labels)


# -- outcome graphs of the minor reductions -----------------------------------


def cycle_with_distance_k_chords(k: int) -> LabeledGraph:
    """Odd cycle of length 2k+1 with a chord for every distance-k pair."""
    _require(k >= 2, "cycle_with_distance_k_chords needs k >= 2")
    n = 2 * k + 1
    verts = list(range(1, n + 1))
    pairs = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    pairs += [(verts[i], verts[(i + k) % n]) for i in range(n)]
    labels = {v: f"cyc:{i+1}" for i, v in enumerate(verts)}
    return LabeledGraph(Multigraph.from_pairs(pairs), labels)


def cycle_plus_two_hubs(k: int) -> LabeledGraph:
    """Cycle of length k plus two adjacent vertices seeing every cycle vertex."""
    _require(k >= 2, "cycle_plus_two_hubs needs k >= 2")
    cyc = list(range(2, k + 2))
    pairs = [(cyc[i], cyc[(i + 1) % k]) for i in range(k)]
    pairs += [(0, c) for c in cyc]
    pairs += [(1, c) for c in cyc]
    pairs.append((0, 1))
    labels = {0: "hub0", 1: "hub0'"}
    labels.update({c: f"cyc:{i+1}" for i, c in enumerate(cyc)})
    return LabeledGraph(Multigraph.from_pairs(pairs), labels)


def a4_gadget() -> LabeledGraph:
    """Double wheel on 8 rim vertices with two rim edges subdivided and the
    two subdivision vertices joined by a new edge.

    The rim edges at positions 1-2 and 5-6 are the subdivided ones; the
    joining edge is the unique edge between the two "mid" vertices.
    """
    adw = alt_double_wheel(4)
    g = adw.graph
    rim = [adw.vertex(f"rim:{i}") for i in range(1, 9)]
    e12 = next(
        e for e, u, v in g.edges() if {u, v} == {rim[0], rim[1]}
    )
    e56 = next(
        e for e, u, v in g.edges() if {u, v} == {rim[4], rim[5]}
    )
    g, (p,), _ = g.subdivide_edge(e12, 1)
    g, (q,), _ = g.subdivide_edge(e56, 1)
    g = g.add_edge(g.next_edge_id(), p, q)
    labels = dict(adw.labels)
    labels[p] = "mid:1"
    labels[q] = "mid:2"
    return LabeledGraph(g, labels)


def linking_edge(lg: LabeledGraph) -> int:
    """The edge joining the two mid vertices of the a4 gadget."""
    p, q = lg.vertex("mid:1"), lg.vertex("mid:2")
    for e, u, v in lg.graph.edges():
        if {u, v} == {p, q}:
            return e
    raise GraphError("gadget has no linking edge")
