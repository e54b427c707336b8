"""Bespoke structure predicates: internal 3-connectivity, shallowness,
robust and flexible cycles, and the tripod / disk-embedding dichotomy.

A BoundaryContext is a plane graph with three designated vertices on the
outer face, internally 3-connected towards them, loopless.  Robustness
and flexibility of a cycle are evaluated exactly as defined, relative to
that embedding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .containment import c_bridges
from .errors import BudgetExceededError, GraphError
from .multigraph import (
    Multigraph,
    Separation,
    enumerate_separations,
    is_k_connected,
)
from .planarity import (
    PlaneGraph,
    CycleInterior,
    cycle_order,
    disk_embeddable,
    interior_edges,
)

__all__ = [
    "BoundaryContext",
    "RobustWitness",
    "FlexibleWitness",
    "ShallowReport",
    "Tripod",
    "internally_3_connected",
    "is_almost_4_connected",
    "is_t_shallow",
    "is_robust_cycle",
    "flexible_analysis",
    "find_robust_or_flexible",
    "maximal_robust_or_flexible",
    "find_tripod",
    "verify_tripod",
    "iter_cycles",
]


# -- cycle enumeration --------------------------------------------------------


class _Counter:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError("cycle enumeration budget exhausted")


def iter_cycles(g: Multigraph, *, budget: int = 500_000):
    """All simple cycles (edge id lists), each exactly once.

    Includes loops and parallel pairs.  Every cycle lives inside one
    block, so enumeration runs per biconnected component; cycles are
    anchored at their smallest vertex and oriented by smallest first
    edge id.
    """
    from .multigraph import blocks as block_decomposition

    counter = _Counter(budget)
    for e, u, v in g.edges():
        if u == v:
            yield [e]
    for blk in block_decomposition(g).blocks:
        if len(blk.edge_ids) < 2:
            continue
        sub = g.subgraph_of_edges(
            [e for e in blk.edge_ids if not g.is_loop(e)]
        )
        for anchor in sub.vertices:
            for e in sub.incident_edges(anchor):
                w = sub.other_end(e, anchor)
                if w < anchor or w == anchor:
                    continue

                def dfs(cur, edges, interior):
                    counter.tick()
                    for f in sub.incident_edges(cur):
                        if f == e or f in edges:
                            continue
                        nxt = sub.other_end(f, cur)
                        if nxt == anchor:
                            if f > e:
                                yield edges + [f]
                            continue
                        if nxt < anchor or nxt in interior:
                            continue
                        yield from dfs(nxt, edges + [f], interior | {nxt})

                yield from dfs(w, [e], {w})


# -- internal 3-connectivity ----------------------------------------------------


def internally_3_connected(g: Multigraph, x1: int, x2: int, x3: int) -> bool:
    """No separation (A, B) of order <= 2 with x1, x2, x3 in A and B - A nonempty.

    Checked by max-flow: every other vertex needs three paths to the
    three marked vertices, pairwise disjoint except at that vertex.
    """
    xs = {x1, x2, x3}
    if len(xs) != 3:
        raise GraphError("boundary vertices must be distinct")
    for x in xs:
        if not g.has_vertex(x):
            raise GraphError(f"unknown vertex {x}")
    others = [v for v in g.vertices if v not in xs]
    if not others:
        return True
    from .multigraph import _vertex_flow_at_least

    t = g.next_vertex_id()
    aug = g.add_vertex(t)
    ne = g.next_edge_id()
    for i, x in enumerate(sorted(xs)):
        aug = aug.add_edge(ne + i, x, t)
    return all(_vertex_flow_at_least(aug, v, t, 3) for v in others)


def is_almost_4_connected(g: Multigraph) -> bool:
    """3-connected with every order-3 separation having a side of <= 1 vertex."""
    if not is_k_connected(g, 3):
        return False
    for sep in enumerate_separations(g, 3):
        if sep.order == 3:
            if len(sep.side_a - sep.side_b) > 1 and len(sep.side_b - sep.side_a) > 1:
                return False
    return True


@dataclass
class ShallowReport:
    holds: bool
    violation: Separation | None = None


def is_t_shallow(g: Multigraph, t: int) -> ShallowReport:
    """Every order-<=3 separation has a small disk-embeddable side.

    A side qualifies when it has fewer than t vertices and embeds in a
    disk with the middle on the boundary.
    """
    if t < 4:
        raise GraphError("shallowness threshold must be at least 4")

    def side_ok(side: frozenset[int], middle: frozenset[int]) -> bool:
        if len(side) >= t:
            return False
        return disk_embeddable(g.restrict(side), sorted(middle)) is not None

    for sep in enumerate_separations(g, 3):
        mid = sep.middle
        if not (side_ok(sep.side_a, mid) or side_ok(sep.side_b, mid)):
            return ShallowReport(False, sep)
    return ShallowReport(True)


# -- boundary contexts ------------------------------------------------------------


@dataclass
class BoundaryContext:
    plane: PlaneGraph
    x1: int
    x2: int
    x3: int

    @property
    def graph(self) -> Multigraph:
        return self.plane.graph

    @property
    def boundary(self) -> tuple[int, int, int]:
        return (self.x1, self.x2, self.x3)

    def validate(self) -> None:
        g = self.graph
        if len({self.x1, self.x2, self.x3}) != 3:
            raise GraphError("boundary vertices must be distinct")
        if any(g.is_loop(e) for e in g.edge_ids):
            raise GraphError("context graph must be loopless")
        on_outer = self.plane.outer_vertices()
        if not {self.x1, self.x2, self.x3} <= on_outer:
            raise GraphError("boundary vertices must lie on the outer face")
        if not internally_3_connected(g, self.x1, self.x2, self.x3):
            raise GraphError("graph is not internally 3-connected to the boundary")

    @classmethod
    def build(cls, g: Multigraph, x1: int, x2: int, x3: int) -> "BoundaryContext":
        pg = disk_embeddable(g, [x1, x2, x3])
        if pg is None:
            raise GraphError("graph has no disk embedding with the boundary exposed")
        ctx = cls(pg, x1, x2, x3)
        ctx.validate()
        return ctx


# -- robust and flexible cycles ----------------------------------------------------


@dataclass
class RobustWitness:
    cycle_edges: tuple[int, ...]
    inside_edge: int


@dataclass
class FlexibleWitness:
    cycle_edges: tuple[int, ...]
    z_set: frozenset[int]


def _standing_ok(ctx: BoundaryContext, cycle_edges) -> tuple[list[int], CycleInterior] | None:
    verts, eids = cycle_order(ctx.graph, cycle_edges)
    if {ctx.x1, ctx.x2, ctx.x3} <= set(verts):
        return None
    ins = interior_edges(ctx.plane, eids)
    if not ins.inside_edges:
        return None
    return verts, ins


def is_robust_cycle(ctx: BoundaryContext, cycle_edges) -> RobustWitness | None:
    """An inside edge f keeping all three boundary neighbors together.

    Quantifiers exactly as defined: some f in ins(C) works for every
    cycle edge e.
    """
    standing = _standing_ok(ctx, cycle_edges)
    if standing is None:
        return None
    verts, ins = standing
    g = ctx.graph
    xs = ctx.boundary
    nbrs = [g.neighbors(x) - set(xs) for x in xs]
    eids = ins.cycle_edges
    for f in sorted(ins.inside_edges):
        good_f = True
        for e in eids:
            comps = g.components(
                forbidden_vertices=xs, forbidden_edges={e, f}
            )
            if not any(
                all(comp & ns for ns in nbrs) for comp in comps
            ):
                good_f = False
                break
        if good_f:
            return RobustWitness(tuple(eids), f)
    return None


def flexible_analysis(ctx: BoundaryContext, cycle_edges) -> FlexibleWitness | None:
    """The Z-set evaluation for flexibility.

    Z holds the cycle vertices that are marked or leave E(C) + ins(C);
    flexible needs |Z| <= 3 with two unmarked members leaving exactly once.
    """
    standing = _standing_ok(ctx, cycle_edges)
    if standing is None:
        return None
    verts, ins = standing
    g = ctx.graph
    xs = set(ctx.boundary)
    covered = set(ins.cycle_edges) | set(ins.inside_edges)
    z: dict[int, int] = {}
    for v in verts:
        out = [e for e in g.incident_edges(v) if e not in covered]
        if v in xs or out:
            z[v] = len(out)
    if len(z) > 3:
        return None
    singles = [v for v in z if v not in xs and z[v] == 1]
    if len(singles) < 2:
        return None
    return FlexibleWitness(tuple(ins.cycle_edges), frozenset(z))


def _verify_either(ctx, eids):
    w = is_robust_cycle(ctx, eids)
    if w is not None:
        return ("robust", w)
    w = flexible_analysis(ctx, eids)
    if w is not None:
        return ("flexible", w)
    return None


def _chain_structure(ctx: BoundaryContext):
    """Components of G - boundary split along its cut edges, path-ordered."""
    g = ctx.graph
    b = g.delete_vertices(ctx.boundary)
    cut_edges = _bridge_edges(b)
    comps = b.components(forbidden_edges=cut_edges)
    if len(comps) <= 1:
        return None
    index_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            index_of[v] = i
    adj: dict[int, set[int]] = {i: set() for i in range(len(comps))}
    for e in cut_edges:
        u, v = b.ends(e)
        iu, iv = index_of[u], index_of[v]
        if iu != iv:
            adj[iu].add(iv)
            adj[iv].add(iu)
    degs = sorted(len(s) for s in adj.values())
    if degs.count(1) != 2 or any(d > 2 for d in degs):
        return None
    start = min(i for i, s in adj.items() if len(s) == 1)
    order = [start]
    prev = None
    while True:
        nxts = [j for j in adj[order[-1]] if j != prev]
        if not nxts:
            break
        prev = order[-1]
        order.append(nxts[0])
    if len(order) != len(comps):
        return None
    return [comps[i] for i in order]


def _bridge_edges(g: Multigraph) -> list[int]:
    out = []
    for e, u, v in g.edges():
        if u == v:
            continue
        if len(g.parallel_class(e)) > 1:
            continue
        if v not in g.component_of(u, forbidden_edges=[e]):
            out.append(e)
    return out


def find_robust_or_flexible(
    ctx: BoundaryContext, *, budget: int = 500_000
):
    """A verified robust or flexible cycle, or None below the guarantee size.

    Search order: cycles of the boundary-free part with nonempty
    interior (robust by the facial-cycle lemma, but verified anyway);
    then cycles assembled inside windows of the chain structure; then a
    bounded exhaustive scan.  Every returned witness is re-checked by the
    defining predicate, never trusted from theory.
    """
    g = ctx.graph
    xs = ctx.boundary
    b = g.delete_vertices(xs)
    for eids in iter_cycles(b, budget=budget):
        ins = interior_edges(ctx.plane, eids)
        if not ins.inside_edges:
            continue
        res = _verify_either(ctx, eids)
        if res is not None:
            return (tuple(sorted(eids)), res[0], res[1])
    chain = _chain_structure(ctx)
    if chain is not None:
        for width in (2, 3):
            for i in range(len(chain) - width + 1):
                window = frozenset().union(*chain[i : i + width])
                for x in xs:
                    region = window | {x}
                    sub = g.restrict(region)
                    for eids in iter_cycles(sub, budget=budget):
                        verts, _ = cycle_order(sub, eids)
                        if x not in verts:
                            continue
                        res = _verify_either(ctx, eids)
                        if res is not None:
                            return (tuple(sorted(eids)), res[0], res[1])
    for eids in iter_cycles(g, budget=budget):
        res = _verify_either(ctx, eids)
        if res is not None:
            return (tuple(sorted(eids)), res[0], res[1])
    return None


def _cycle_ins_set(ctx, eids) -> frozenset[int]:
    return interior_edges(ctx.plane, eids).inside_edges


def _enlarge_through_bridge(ctx, eids):
    """One enlargement step: absorb a violating bridge into the cycle."""
    g = ctx.graph
    xs = set(ctx.boundary)
    ins = _cycle_ins_set(ctx, eids)
    verts, ordered = cycle_order(g, eids)
    vset = set(verts)
    for bridge in c_bridges(g, eids):
        if bridge.edges <= ins:
            continue
        if (bridge.vertices - vset) & xs:
            continue
        # find a path through the bridge between two cycle vertices,
        # avoiding the boundary
        att = sorted(bridge.attachments - xs)
        for a, bb in itertools.combinations(att, 2):
            sub = g.subgraph_of_edges(bridge.edges)
            sub = sub.delete_vertices([v for v in xs if sub.has_vertex(v)])
            if not (sub.has_vertex(a) and sub.has_vertex(bb)):
                continue
            comp = sub.component_of(a)
            if bb not in comp:
                continue
            path = _shortest_path_edges(sub, a, bb)
            if path is None:
                continue
            # two replacement cycles: path + either arc of C between a, bb
            arcs = _arcs_between(g, verts, ordered, a, bb)
            for arc in arcs:
                cand = list(path) + list(arc)
                try:
                    cycle_order(g, cand)
                except GraphError:
                    continue
                if _cycle_ins_set(ctx, cand) > _cycle_ins_set(ctx, eids):
                    res = _verify_either(ctx, cand)
                    if res is not None:
                        return cand, res
    return None


def _shortest_path_edges(g: Multigraph, a: int, b: int):
    prev: dict[int, tuple[int, int] | None] = {a: None}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for v in sorted(frontier):
            for e in g.incident_edges(v):
                w = g.other_end(e, v)
                if w not in prev:
                    prev[w] = (v, e)
                    nxt.append(w)
        frontier = nxt
    if b not in prev:
        return None
    out = []
    cur = b
    while prev[cur] is not None:
        v, e = prev[cur]
        out.append(e)
        cur = v
    return out[::-1]


def _arcs_between(g, verts, ordered, a, b):
    ia, ib = verts.index(a), verts.index(b)
    if ia == ib:
        return []
    lo, hi = min(ia, ib), max(ia, ib)
    arc1 = ordered[lo:hi]
    arc2 = ordered[hi:] + ordered[:lo]
    return [arc1, arc2]


def maximal_robust_or_flexible(
    ctx: BoundaryContext, *, budget: int = 500_000, enumerate_cap: int = 20_000
):
    """A robust or flexible cycle with inclusion-maximal ins(C).

    At desk scale every cycle is enumerated and verified; on larger
    instances the first witness is greedily enlarged through violating
    bridges (each enlargement strictly grows the interior and is
    re-verified).  Among inclusion-maximal incomparable candidates the
    one with more interior edges, then smallest edge ids, is returned.
    """
    candidates: list[tuple[tuple[int, ...], tuple]] = []
    all_cycles: list[list[int]] | None = []
    try:
        for eids in iter_cycles(ctx.graph, budget=enumerate_cap):
            all_cycles.append(eids)
    except BudgetExceededError:
        all_cycles = None
    if all_cycles is not None:
        for eids in all_cycles:
            res = _verify_either(ctx, eids)
            if res is not None:
                candidates.append((tuple(eids), res))
    else:
        found = find_robust_or_flexible(ctx, budget=budget)
        if found is not None:
            eids, kind, wit = found
            cur = list(eids)
            res = (kind, wit)
            while True:
                step = _enlarge_through_bridge(ctx, cur)
                if step is None:
                    break
                cur, res = step
            candidates.append((tuple(cur), res))
    if not candidates:
        raise GraphError("no robust or flexible cycle exists")
    ins_sets = {eids: _cycle_ins_set(ctx, eids) for eids, _ in candidates}
    maximal = [
        (eids, res)
        for eids, res in candidates
        if not any(
            ins_sets[other] > ins_sets[eids] for other, _ in candidates
        )
    ]
    maximal.sort(key=lambda item: (-len(ins_sets[item[0]]), sorted(item[0])))
    eids, (kind, wit) = maximal[0]
    return eids, kind, wit


# -- tripods -------------------------------------------------------------------


@dataclass
class Tripod:
    """Three disjoint leg paths into two triads sharing the contact feet."""

    feet: tuple[int, int, int]
    contacts: tuple[int, int, int]
    centers: tuple[int, int]
    leg_paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    triad_paths: tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]


def _walk_vertices(g: Multigraph, start: int, edges) -> list[int]:
    out = [start]
    cur = start
    for e in edges:
        cur = g.other_end(e, cur)
        out.append(cur)
    return out


def verify_tripod(g: Multigraph, tripod: Tripod) -> bool:
    """Direct check of the tripod disjointness and endpoint conditions."""
    u = tripod.feet
    v = tripod.contacts
    c = tripod.centers
    if len(set(u)) != 3 or len(set(v)) != 3 or len(set(c)) != 2:
        return False
    if set(c) & set(v):
        return False
    walks = []
    for i in range(3):
        w = _walk_vertices(g, u[i], tripod.leg_paths[i])
        if w[-1] != v[i]:
            return False
        walks.append(("leg", i, w))
    for t in range(2):
        for i in range(3):
            w = _walk_vertices(g, c[t], tripod.triad_paths[t][i])
            if len(tripod.triad_paths[t][i]) == 0 or w[-1] != v[i]:
                return False
            walks.append(("triad", (t, i), w))
    for (k1, i1, w1), (k2, i2, w2) in itertools.combinations(walks, 2):
        shared = set(w1) & set(w2)
        allowed: set[int] = set()
        if k1 == "leg" and k2 == "leg":
            allowed = set()
        elif k1 == "triad" and k2 == "triad":
            t1, j1 = i1
            t2, j2 = i2
            if t1 == t2:
                allowed = {c[t1]}
            else:
                allowed = set()
            if j1 == j2:
                allowed |= {v[j1]}
        else:
            leg_i = i1 if k1 == "leg" else i2
            tri = i1 if k1 == "triad" else i2
            if tri[1] == leg_i:
                allowed = {v[leg_i]}
        if not shared <= allowed:
            return False
    all_edges = list(
        itertools.chain.from_iterable(
            list(tripod.leg_paths) + [p for t in tripod.triad_paths for p in t]
        )
    )
    if len(all_edges) != len(set(all_edges)):
        return False
    return True


def find_tripod(
    g: Multigraph, u1: int, u2: int, u3: int, *, budget: int = 2_000_000
) -> PlaneGraph | Tripod:
    """The disk-embedding / tripod dichotomy for three chosen feet.

    Requires internal 3-connectivity towards the feet.  Returns a plane
    graph exposing the feet when one exists, otherwise searches for a
    tripod: choose contacts and centers, then route the six triad paths
    and the legs with backtracking (complete at desk scale; the
    dichotomy guarantees one of the outcomes).
    """
    from .containment import _Budget, _iter_paths

    feet = (u1, u2, u3)
    if not internally_3_connected(g, *feet):
        raise GraphError(
            "a separation of order <= 2 isolates part of the graph from the feet"
        )
    pg = disk_embeddable(g, feet)
    if pg is not None:
        return pg
    bud = _Budget(budget)
    verts = list(g.vertices)

    # mask bit i set: leg i is a nontrivial path, contact differs from foot
    for mask in range(8):
        trivial = [not (mask >> i & 1) for i in range(3)]

        def contact_candidates(i, chosen):
            if trivial[i]:
                return [feet[i]] if feet[i] not in chosen else []
            need = 3  # two triad ends plus a leg end
            return [
                v
                for v in verts
                if v not in chosen and v not in feet and g.degree(v) >= need
            ]

        # centers may not lie on a leg, so feet of nontrivial legs are barred
        barred = {feet[i] for i in range(3) if not trivial[i]}
        for v1 in contact_candidates(0, set()):
            for v2 in contact_candidates(1, {v1}):
                for v3 in contact_candidates(2, {v1, v2}):
                    contacts = (v1, v2, v3)
                    rest = [
                        v
                        for v in verts
                        if v not in contacts
                        and v not in barred
                        and g.degree(v) >= 3
                    ]
                    for c1, c2 in itertools.combinations(rest, 2):
                        tri = _route_tripod(
                            g, feet, contacts, (c1, c2), trivial, bud
                        )
                        if tri is not None:
                            if not verify_tripod(g, tri):
                                raise GraphError(
                                    "internal error: routed tripod failed verification"
                                )
                            return tri
    raise GraphError("neither disk embedding nor tripod found; dichotomy violated")


def _route_tripod(g, feet, contacts, centers, trivial, bud):
    """Route two triads and the legs with shared-endpoint bookkeeping."""
    from .containment import _iter_paths

    anchor_vs = set(contacts) | set(centers)
    for i in range(3):
        if not trivial[i]:
            anchor_vs.add(feet[i])
    if len(anchor_vs) != len(set(contacts)) + 2 + sum(
        0 if t else 1 for t in trivial
    ):
        return None
    jobs: list[tuple[int, int]] = []
    for t in range(2):
        for i in range(3):
            jobs.append((centers[t], contacts[i]))
    for i in range(3):
        if not trivial[i]:
            jobs.append((feet[i], contacts[i]))
    used_e: set[int] = set()
    used_v = set(anchor_vs)
    routed: list[tuple[int, ...]] = []

    def solve(j: int):
        if j == len(jobs):
            yield list(routed)
            return
        a, b = jobs[j]
        for path in _iter_paths(g, a, b, 1, used_v - {a, b}, used_e, bud):
            interior = set()
            cur = a
            for eid in path[:-1]:
                cur = g.other_end(eid, cur)
                interior.add(cur)
            used_e.update(path)
            used_v.update(interior)
            routed.append(tuple(path))
            yield from solve(j + 1)
            routed.pop()
            used_v.difference_update(interior)
            used_e.difference_update(path)

    for sol in solve(0):
        triads = (tuple(sol[0:3]), tuple(sol[3:6]))
        legs: list[tuple[int, ...]] = []
        k = 6
        for i in range(3):
            if trivial[i]:
                legs.append(())
            else:
                legs.append(sol[k])
                k += 1
        return Tripod(feet, contacts, centers, tuple(legs), triads)
    return None
