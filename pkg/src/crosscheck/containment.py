"""Subdivision and minor containment with certificates, bridges, crosses.

The subdivision search assigns images to pattern vertices of degree >= 3
or == 1 (degree-2 vertices are absorbed into chains beforehand) and then
routes internally disjoint host paths chain by chain, backtracking
through both stages.  "None" answers are exhaustive proofs; running out
of budget raises instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    BudgetExceededError,
    GraphError,
    HypothesisViolationError,
    NotACycleError,
)
from .multigraph import Multigraph, is_k_connected
from .planarity import cycle_order, is_peripheral, is_planar

__all__ = [
    "HomeoEmbedding",
    "EtaBridge",
    "EtaCross",
    "MinorModel",
    "verify_homeo",
    "find_subdivision",
    "iter_subdivisions",
    "identity_embedding",
    "eta_bridges",
    "c_bridges",
    "stabilize",
    "find_eta_cross",
    "iter_eta_crosses",
    "is_free_cross",
    "find_minor",
    "verify_minor_model",
]


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int):
        self.left = n

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise BudgetExceededError("search budget exhausted")


# -- witnesses ---------------------------------------------------------------


@dataclass
class HomeoEmbedding:
    """Witness that the host contains a subdivision of the pattern."""

    pattern: Multigraph
    host: Multigraph
    vertex_map: dict[int, int]
    edge_map: dict[int, tuple[int, ...]]

    def path_walk(self, pattern_edge: int) -> list[int]:
        """Host vertex walk of the path assigned to a pattern edge."""
        u, v = self.pattern.ends(pattern_edge)
        start = self.vertex_map[u]
        walk = [start]
        cur = start
        for eid in self.edge_map[pattern_edge]:
            cur = self.host.other_end(eid, cur)
            walk.append(cur)
        return walk

    def image_vertices(self) -> frozenset[int]:
        out = set(self.vertex_map.values())
        for pe in self.edge_map:
            out.update(self.path_walk(pe))
        return frozenset(out)

    def image_edges(self) -> frozenset[int]:
        out: set[int] = set()
        for seq in self.edge_map.values():
            out.update(seq)
        return frozenset(out)


def verify_homeo(eta: HomeoEmbedding) -> bool:
    """Check the three homeomorphic-embedding conditions directly."""
    pat, host = eta.pattern, eta.host
    vm, em = eta.vertex_map, eta.edge_map
    if set(vm) != set(pat.vertices) or set(em) != set(pat.edge_ids):
        return False
    for hv in vm.values():
        if not host.has_vertex(hv):
            return False
    # (i) injective
    if len(set(vm.values())) != len(vm):
        return False
    images = set(vm.values())
    walks = {}
    for pe in pat.edge_ids:
        u, v = pat.ends(pe)
        seq = em[pe]
        if not seq:
            return False
        for eid in seq:
            if not host.has_edge(eid):
                return False
        try:
            walk = eta.path_walk(pe)
        except GraphError:
            return False
        # (ii) a path between the end images, internally avoiding all images
        if walk[0] != vm[u] or walk[-1] != vm[v]:
            return False
        interior = walk[1:-1]
        closed = u == v
        if closed:
            if walk[0] != walk[-1] or len(seq) < 1:
                return False
            if len(set(interior)) != len(interior):
                return False
        else:
            if len(set(walk)) != len(walk):
                return False
        if images & set(interior):
            return False
        walks[pe] = walk
    # (iii) pairwise edge-disjoint; shared vertices are shared ends
    for e1, e2 in itertools.combinations(pat.edge_ids, 2):
        if set(em[e1]) & set(em[e2]):
            return False
        shared = set(walks[e1]) & set(walks[e2])
        ends1 = {walks[e1][0], walks[e1][-1]}
        ends2 = {walks[e2][0], walks[e2][-1]}
        if not shared <= (ends1 & ends2):
            return False
    return True


# -- pattern skeleton ----------------------------------------------------------


@dataclass(frozen=True)
class _Chain:
    start: int  # terminal pattern vertex
    end: int  # terminal pattern vertex (== start for closed chains)
    edges: tuple[int, ...]
    interior: tuple[int, ...]  # pattern degree-2 vertices along the chain
    closed: bool


@dataclass
class _Skeleton:
    terminals: list[int]
    chains: list[_Chain]
    cycle_components: list[tuple[tuple[int, ...], tuple[int, ...]]]  # (verts, edges)
    isolated: list[int]


def _skeletonize(pat: Multigraph) -> _Skeleton:
    terminals = [
        v for v in pat.vertices if pat.degree(v) >= 3 or pat.degree(v) == 1
    ]
    tset = set(terminals)
    isolated = [v for v in pat.vertices if pat.degree(v) == 0]
    chains: list[_Chain] = []
    used_edges: set[int] = set()
    for t in terminals:
        for e in pat.incident_edges(t):
            starts = [0, 1] if pat.is_loop(e) else [0]
            for _ in starts:
                if e in used_edges:
                    continue
                edges = [e]
                used_edges.add(e)
                interior: list[int] = []
                cur = pat.other_end(e, t)
                prev = e
                while cur not in tset:
                    interior.append(cur)
                    nxt = next(
                        x for x in pat.incident_edges(cur) if x != prev
                    )
                    edges.append(nxt)
                    used_edges.add(nxt)
                    cur = pat.other_end(nxt, cur)
                    prev = nxt
                chains.append(
                    _Chain(t, cur, tuple(edges), tuple(interior), closed=(cur == t))
                )
    cycles = []
    seen: set[int] = set()
    for v in pat.vertices:
        if v in tset or v in seen or pat.degree(v) != 2:
            continue
        comp = pat.component_of(v)
        if any(u in tset for u in comp):
            continue
        seen |= comp
        eids = [e for e, a, b in pat.edges() if a in comp]
        verts, ordered = cycle_order(pat, eids)
        cycles.append((tuple(verts), tuple(ordered)))
    return _Skeleton(terminals, chains, cycles, isolated)


def _order_terminals(pat: Multigraph, sk: _Skeleton) -> list[int]:
    remaining = set(sk.terminals)
    chain_partners: dict[int, list[int]] = {t: [] for t in sk.terminals}
    for ch in sk.chains:
        if not ch.closed:
            chain_partners[ch.start].append(ch.end)
            chain_partners[ch.end].append(ch.start)
    order: list[int] = []
    placed: set[int] = set()
    while remaining:
        if not order:
            best = max(remaining, key=lambda t: (pat.degree(t), -t))
        else:
            best = max(
                remaining,
                key=lambda t: (
                    sum(1 for p in chain_partners[t] if p in placed),
                    pat.degree(t),
                    -t,
                ),
            )
        order.append(best)
        placed.add(best)
        remaining.discard(best)
    return order


# -- subdivision search --------------------------------------------------------


def _iter_paths(host, a, b, min_len, used_v, used_e, budget, closed=False):
    """Simple host paths a..b (cycles when closed) avoiding used state.

    Interiors avoid used_v; all edges avoid used_e.  Yields edge id lists
    of length >= min_len, deterministically.
    """
    if closed:
        for e in host.incident_edges(a):
            if e in used_e:
                continue
            w = host.other_end(e, a)
            if host.is_loop(e):
                if min_len <= 1:
                    yield [e]
                continue
            if w in used_v:
                continue
            for tail in _iter_paths(
                host, w, a, max(1, min_len - 1), used_v, used_e | {e}, budget
            ):
                # each cycle is traversed twice; keep one direction
                if e < tail[-1]:
                    yield [e, *tail]
        return
    budget.spend()
    if a == b:
        raise GraphError("open chain with equal image endpoints")

    def dfs(cur, edges, interior):
        budget.spend()
        for e in sorted(host.incident_edges(cur)):
            if e in used_e or e in edges_set or host.is_loop(e):
                continue
            w = host.other_end(e, cur)
            if w == b:
                if len(edges) + 1 >= min_len:
                    yield edges + [e]
                continue
            if w in used_v or w in interior or w == a:
                continue
            edges_set.add(e)
            yield from dfs(w, edges + [e], interior | {w})
            edges_set.discard(e)

    edges_set: set[int] = set()
    yield from dfs(a, [], set())


def _iter_free_cycles(host, min_len, used_v, used_e, budget):
    """Cycles fully inside the unused part of the host, each once."""
    avail = [v for v in host.vertices if v not in used_v]
    for anchor in avail:
        budget.spend()
        blocked = used_v | {v for v in avail if v < anchor}
        for e in sorted(host.incident_edges(anchor)):
            if e in used_e:
                continue
            if host.is_loop(e):
                if min_len <= 1:
                    yield anchor, [e]
                continue
            w = host.other_end(e, anchor)
            if w in blocked:
                continue
            for tail in _iter_paths(
                host,
                w,
                anchor,
                max(1, min_len - 1),
                blocked,
                used_e | {e},
                budget,
            ):
                if e < tail[-1]:
                    yield anchor, [e, *tail]


def iter_subdivisions(
    pattern: Multigraph,
    host: Multigraph,
    *,
    fixed_images: dict[int, int] | None = None,
    budget: int = 2_000_000,
):
    """Yield homeomorphic embeddings of the pattern into the host.

    Exhaustive up to the budget; every candidate branch assignment and
    path system is explored in a deterministic order.  fixed_images pins
    chosen pattern vertices (terminals only) to host vertices.
    """
    fixed_images = dict(fixed_images or {})
    bud = _Budget(budget)
    sk = _skeletonize(pattern)
    for v in fixed_images:
        if v not in sk.terminals:
            raise GraphError("fixed images must be branch or leaf vertices")

    # cheap impossibility filters: these make "none" immediate when a
    # topological or counting obstruction exists
    if pattern.num_edges > host.num_edges or pattern.num_vertices > host.num_vertices:
        return
    pdegs = sorted((pattern.degree(v) for v in pattern.vertices), reverse=True)
    hdegs = sorted((host.degree(v) for v in host.vertices), reverse=True)
    if any(p > h for p, h in zip(pdegs, hdegs)):
        return
    if is_planar(host) and not is_planar(pattern):
        return  # subdivisions preserve non-planarity

    order = _order_terminals(pattern, sk)
    ready_chains: dict[int, list[_Chain]] = {t: [] for t in order}
    for ch in sk.chains:
        hi = max(order.index(ch.start), order.index(ch.end))
        ready_chains[order[hi]].append(ch)
    tasks: list[tuple[str, object]] = []
    for t in order:
        tasks.append(("assign", t))
        for ch in sorted(
            ready_chains[t], key=lambda c: (len(c.edges), c.edges)
        ):
            tasks.append(("chain", ch))
    for comp in sorted(sk.cycle_components):
        tasks.append(("cycle", comp))

    vmap: dict[int, int] = {}
    emap: dict[int, tuple[int, ...]] = {}
    used_v: set[int] = set()  # all image and interior vertices
    used_e: set[int] = set()

    def assemble() -> HomeoEmbedding:
        return HomeoEmbedding(pattern, host, dict(vmap), dict(emap))

    def split_chain(ch: _Chain, path: list[int]) -> None:
        # first interior vertices take single edges, the tail gets the rest
        walk = [vmap[ch.start]]
        cur = walk[0]
        for eid in path:
            cur = host.other_end(eid, cur)
            walk.append(cur)
        k = len(ch.interior)
        for i, pv in enumerate(ch.interior):
            vmap[pv] = walk[i + 1]
        for i, pe in enumerate(ch.edges):
            if i < k:
                emap[pe] = (path[i],)
            else:
                emap[pe] = tuple(path[k:])

    def unsplit_chain(ch: _Chain) -> None:
        for pv in ch.interior:
            vmap.pop(pv, None)
        for pe in ch.edges:
            emap.pop(pe, None)

    def place_cycle(comp, anchor: int, path: list[int]) -> None:
        verts, eids = comp
        walk = [anchor]
        cur = anchor
        for eid in path:
            cur = host.other_end(eid, cur)
            walk.append(cur)
        k = len(verts)
        for i, pv in enumerate(verts):
            vmap[pv] = walk[i]
        for i, pe in enumerate(eids):
            if i < k - 1:
                emap[pe] = (path[i],)
            else:
                emap[pe] = tuple(path[k - 1 :])

    def unplace_cycle(comp) -> None:
        verts, eids = comp
        for pv in verts:
            vmap.pop(pv, None)
        for pe in eids:
            emap.pop(pe, None)

    def solve(i: int):
        bud.spend()
        if i == len(tasks):
            spare = host.num_vertices - len(used_v)
            if spare >= len(sk.isolated):
                free = sorted(v for v in host.vertices if v not in used_v)
                for pv, hv in zip(sk.isolated, free):
                    vmap[pv] = hv
                    used_v.add(hv)
                yield assemble()
                for pv in sk.isolated:
                    used_v.discard(vmap.pop(pv))
            return
        kind, payload = tasks[i]
        if kind == "assign":
            t = payload
            want_deg = pattern.degree(t)
            if t in fixed_images:
                cands = [fixed_images[t]]
            else:
                cands = sorted(
                    (v for v in host.vertices if v not in used_v),
                    key=lambda v: (-host.degree(v), v),
                )
            for hv in cands:
                if hv in used_v or host.degree(hv) < want_deg:
                    continue
                vmap[t] = hv
                used_v.add(hv)
                yield from solve(i + 1)
                used_v.discard(hv)
                del vmap[t]
        elif kind == "chain":
            ch = payload
            a, b = vmap[ch.start], vmap[ch.end]
            min_len = len(ch.edges)
            gen = _iter_paths(
                host, a, b, min_len, used_v - {a, b}, used_e, bud, closed=ch.closed
            )
            for path in gen:
                walk_interior = set()
                cur = a
                for eid in path[:-1]:
                    cur = host.other_end(eid, cur)
                    walk_interior.add(cur)
                used_e.update(path)
                used_v.update(walk_interior)
                split_chain(ch, path)
                yield from solve(i + 1)
                unsplit_chain(ch)
                used_v.difference_update(walk_interior)
                used_e.difference_update(path)
        else:  # pure cycle component
            comp = payload
            verts, eids = comp
            for anchor, path in _iter_free_cycles(
                host, len(eids), used_v, used_e, bud
            ):
                cyc_vs = {anchor}
                cur = anchor
                for eid in path[:-1]:
                    cur = host.other_end(eid, cur)
                    cyc_vs.add(cur)
                used_e.update(path)
                used_v.update(cyc_vs)
                place_cycle(comp, anchor, path)
                yield from solve(i + 1)
                unplace_cycle(comp)
                used_v.difference_update(cyc_vs)
                used_e.difference_update(path)

    yield from solve(0)


def find_subdivision(
    pattern: Multigraph,
    host: Multigraph,
    *,
    fixed_images: dict[int, int] | None = None,
    budget: int = 2_000_000,
) -> HomeoEmbedding | None:
    """First homeomorphic embedding of the pattern into the host, or None."""
    return next(
        iter_subdivisions(pattern, host, fixed_images=fixed_images, budget=budget),
        None,
    )


# -- bridges -------------------------------------------------------------------


@dataclass(frozen=True)
class EtaBridge:
    edges: frozenset[int]
    vertices: frozenset[int]
    attachments: frozenset[int]
    stable: bool

    def is_chord(self) -> bool:
        return len(self.edges) == 1 and self.vertices == self.attachments


def identity_embedding(sub: Multigraph, g: Multigraph) -> HomeoEmbedding:
    """The embedding mapping a subgraph of g onto itself."""
    for v in sub.vertices:
        if not g.has_vertex(v):
            raise GraphError("subgraph vertex missing from graph")
    for e, u, v in sub.edges():
        if not g.has_edge(e) or g.ends(e) != (u, v):
            raise GraphError("subgraph edge missing from graph")
    return HomeoEmbedding(
        sub, g, {v: v for v in sub.vertices}, {e: (e,) for e in sub.edge_ids}
    )


def eta_bridges(eta: HomeoEmbedding) -> list[EtaBridge]:
    """Partition of the host edges outside the image into bridges."""
    host = eta.host
    img_v = eta.image_vertices()
    img_e = eta.image_edges()
    path_vertex_sets = {
        pe: frozenset(eta.path_walk(pe)) for pe in eta.pattern.edge_ids
    }

    def stability(attachments: frozenset[int]) -> bool:
        return not any(
            attachments <= pvs for pvs in path_vertex_sets.values()
        )

    bridges = []
    claimed: set[int] = set()
    for comp in host.components(forbidden_vertices=img_v):
        edges = set()
        verts = set(comp)
        for v in comp:
            for e in host.incident_edges(v):
                edges.add(e)
                u, w = host.ends(e)
                verts.add(u)
                verts.add(w)
        if not edges:
            continue
        claimed |= edges
        att = frozenset(verts & img_v)
        bridges.append(
            EtaBridge(frozenset(edges), frozenset(verts), att, stability(att))
        )
    for e, u, v in host.edges():
        if e in img_e or e in claimed:
            continue
        att = frozenset({u, v} & img_v)
        bridges.append(
            EtaBridge(frozenset([e]), frozenset({u, v}), att, stability(att))
        )
    bridges.sort(key=lambda b: sorted(b.edges))
    return bridges


def c_bridges(g: Multigraph, cycle_or_edges) -> list[EtaBridge]:
    """Bridges of a subgraph given by its edge ids, via the identity."""
    sub = g.subgraph_of_edges(cycle_or_edges)
    return eta_bridges(identity_embedding(sub, g))


# -- stabilization ---------------------------------------------------------------


def _reroute_once(eta: HomeoEmbedding, bridge: EtaBridge) -> HomeoEmbedding | None:
    """Absorb an unstable bridge into the path it is attached to."""
    host = eta.host
    target = None
    for pe in sorted(eta.pattern.edge_ids):
        if bridge.attachments <= frozenset(eta.path_walk(pe)):
            target = pe
            break
    if target is None or len(bridge.attachments) < 2:
        return None
    walk = eta.path_walk(target)
    pos = {v: i for i, v in enumerate(walk)}
    att_sorted = sorted(bridge.attachments, key=lambda v: pos[v])
    a, b = att_sorted[0], att_sorted[-1]
    if a == b:
        return None
    # shortest route through the bridge from a to b, interior off the image
    img_v = eta.image_vertices()
    allowed = (bridge.vertices - img_v) | {a, b}
    sub = host.restrict(allowed)
    sub = sub.delete_edges(
        [e for e in sub.edge_ids if e not in bridge.edges]
    )
    prev: dict[int, tuple[int, int] | None] = {a: None}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for v in sorted(frontier):
            for e in sub.incident_edges(v):
                w = sub.other_end(e, v)
                if w not in prev:
                    prev[w] = (v, e)
                    nxt.append(w)
        frontier = nxt
    if b not in prev:
        return None
    mid_edges: list[int] = []
    cur = b
    while prev[cur] is not None:
        v, e = prev[cur]
        mid_edges.append(e)
        cur = v
    mid_edges.reverse()
    old = eta.edge_map[target]
    new_seq = tuple(old[: pos[a]]) + tuple(mid_edges) + tuple(old[pos[b] :])
    em = dict(eta.edge_map)
    em[target] = new_seq
    cand = HomeoEmbedding(eta.pattern, eta.host, dict(eta.vertex_map), em)
    return cand if verify_homeo(cand) else None


def stabilize(
    eta: HomeoEmbedding, *, max_rounds: int | None = None, budget: int = 2_000_000
) -> HomeoEmbedding:
    """Rework an embedding until every bridge is stable.

    Images of pattern vertices of degree >= 3 are preserved.  Fast path:
    repeatedly absorb an unstable bridge into its path.  If that cycles
    or stalls, fall back to an exhaustive scan over embeddings with the
    degree->=3 images pinned.  Simplicity and 3-connectivity of the host
    guarantee success; when they fail and no stable embedding exists,
    HypothesisViolationError is raised.
    """
    if not verify_homeo(eta):
        raise GraphError("invalid homeomorphic embedding")
    host = eta.host
    if max_rounds is None:
        max_rounds = 4 * host.num_edges + 10
    seen: set[frozenset[int]] = set()
    cur = eta
    for _ in range(max_rounds):
        bridges = eta_bridges(cur)
        unstable = [b for b in bridges if not b.stable]
        if not unstable:
            return cur
        key = cur.image_edges()
        if key in seen:
            break
        seen.add(key)
        nxt = _reroute_once(cur, unstable[0])
        if nxt is None:
            break
        cur = nxt
    # exhaustive fallback, branch images pinned
    pinned = {
        v: eta.vertex_map[v]
        for v in eta.pattern.vertices
        if eta.pattern.degree(v) >= 3
    }
    for cand in iter_subdivisions(
        eta.pattern, host, fixed_images=pinned, budget=budget
    ):
        if all(b.stable for b in eta_bridges(cand)):
            return cand
    simple = host.num_edges == host.simplify().num_edges
    if not (simple and is_k_connected(host, 3)):
        raise HypothesisViolationError(
            "host is not simple and 3-connected; no stable embedding exists"
        )
    raise GraphError("no stable embedding found despite hypothesis")


# -- eta-crosses -----------------------------------------------------------------


@dataclass(frozen=True)
class EtaCross:
    """Two disjoint eta-paths whose feet interleave on an image cycle."""

    path1: tuple[int, ...]
    path2: tuple[int, ...]
    feet: tuple[int, int, int, int]  # u1, u2, v1, v2 in cyclic order


def _image_cycle_order(eta: HomeoEmbedding, cycle_edges) -> list[int]:
    verts, eids = cycle_order(eta.pattern, cycle_edges)
    walk: list[int] = []
    for i, pe in enumerate(eids):
        tail = eta.vertex_map[verts[i]]
        pw = eta.path_walk(pe)
        if pw[0] != tail:
            pw = pw[::-1]
        walk.extend(pw[:-1])
    return walk


def _eta_paths_on(eta: HomeoEmbedding, on_vertices: frozenset[int], budget: _Budget):
    """Simple eta-paths with both ends in the given image vertex set."""
    host = eta.host
    img_v = eta.image_vertices()
    img_e = eta.image_edges()
    out = []
    for e, u, v in host.edges():
        if e in img_e or u == v:
            continue
        if u in on_vertices and v in on_vertices and u != v:
            out.append(((min(u, v), max(u, v)), (e,), frozenset({u, v})))
    for comp in host.components(forbidden_vertices=img_v):
        attach = set()
        for v in comp:
            for e in host.incident_edges(v):
                w = host.other_end(e, v)
                if w in on_vertices:
                    attach.add(w)
        for a, b in itertools.combinations(sorted(attach), 2):
            region = comp | {a, b}
            sub = host.restrict(region)
            # direct a-b edges are chords, already listed above
            sub = sub.delete_edges(
                [
                    e
                    for e, u, v in sub.edges()
                    if e in img_e or {u, v} <= {a, b}
                ]
            )
            for path in _iter_paths(sub, a, b, 1, frozenset({a, b}), set(), budget):
                vs = {a, b}
                cur = a
                for eid in path:
                    cur = sub.other_end(eid, cur)
                    vs.add(cur)
                out.append(((a, b), tuple(path), frozenset(vs)))
    out.sort(key=lambda item: (item[0], item[1]))
    return out


def iter_eta_crosses(eta: HomeoEmbedding, cycle_edges, *, budget: int = 1_000_000):
    """All eta-crosses in the given peripheral pattern cycle."""
    if not is_peripheral(eta.pattern, cycle_edges):
        raise NotACycleError("cycle is not peripheral in the pattern")
    bud = _Budget(budget)
    ring = _image_cycle_order(eta, cycle_edges)
    pos = {v: i for i, v in enumerate(ring)}
    on_ring = frozenset(ring)
    paths = _eta_paths_on(eta, on_ring, bud)

    def interleaves(f1, f2) -> bool:
        a1, b1 = sorted((pos[f1[0]], pos[f1[1]]))
        inside = {i for i in (pos[f2[0]], pos[f2[1]]) if a1 < i < b1}
        return len(inside) == 1

    for (f1, p1, vs1), (f2, p2, vs2) in itertools.combinations(paths, 2):
        if vs1 & vs2:
            continue
        if len({*f1, *f2}) != 4:
            continue
        if not interleaves(f1, f2):
            continue
        u1, v1 = sorted(f1, key=lambda v: pos[v])
        u2, v2 = sorted(f2, key=lambda v: pos[v])
        if pos[u1] > pos[u2]:
            (u1, v1, p1), (u2, v2, p2) = (u2, v2, p2), (u1, v1, p1)
        yield EtaCross(tuple(p1), tuple(p2), (u1, u2, v1, v2))


def find_eta_cross(eta: HomeoEmbedding, cycle_edges, *, budget: int = 1_000_000):
    return next(iter_eta_crosses(eta, cycle_edges, budget=budget), None)


def is_free_cross(eta: HomeoEmbedding, cross: EtaCross) -> bool:
    """Conditions (F1) and (F2) for a cross, evaluated exactly."""
    path_vs = {
        pe: frozenset(eta.path_walk(pe)) for pe in eta.pattern.edge_ids
    }
    ends1 = {cross.feet[0], cross.feet[2]}
    ends2 = {cross.feet[1], cross.feet[3]}
    for ends in (ends1, ends2):
        if any(ends <= pvs for pvs in path_vs.values()):
            return False  # (F1)
    feet = set(cross.feet)
    for e1, e2 in itertools.combinations_with_replacement(
        sorted(eta.pattern.edge_ids), 2
    ):
        if feet <= path_vs[e1] | path_vs[e2]:
            u1, v1 = eta.pattern.ends(e1)
            u2, v2 = eta.pattern.ends(e2)
            if {u1, v1} & {u2, v2}:
                return False  # (F2)
    return True


# -- minors ----------------------------------------------------------------------


@dataclass
class MinorModel:
    """Branch sets plus a distinct host edge for every pattern edge."""

    pattern: Multigraph
    host: Multigraph
    branch_sets: dict[int, frozenset[int]]
    edge_assign: dict[int, int]


def verify_minor_model(model: MinorModel) -> bool:
    pat, host = model.pattern, model.host
    bs = model.branch_sets
    if set(bs) != set(pat.vertices):
        return False
    allv: set[int] = set()
    for s in bs.values():
        if not s or not s <= set(host.vertices):
            return False
        if allv & s:
            return False
        allv |= s
        some = next(iter(s))
        if host.restrict(s).component_of(some) != s:
            return False
    if set(model.edge_assign) != set(pat.edge_ids):
        return False
    if len(set(model.edge_assign.values())) != len(model.edge_assign):
        return False
    loops_by_vertex: dict[int, list[int]] = {}
    for pe, he in model.edge_assign.items():
        pu, pv = pat.ends(pe)
        hu, hv = host.ends(he)
        if pu == pv:
            if not {hu, hv} <= bs[pu]:
                return False
            loops_by_vertex.setdefault(pu, []).append(he)
        else:
            if not (
                (hu in bs[pu] and hv in bs[pv]) or (hu in bs[pv] and hv in bs[pu])
            ):
                return False
    for pv, loop_edges in loops_by_vertex.items():
        sub = host.restrict(bs[pv]).delete_edges(loop_edges)
        some = next(iter(bs[pv]))
        if sub.component_of(some) != bs[pv]:
            return False
    return True


def _pattern_multiplicities(pat: Multigraph):
    mult: dict[tuple[int, int], int] = {}
    loops: dict[int, int] = {}
    for _, u, v in pat.edges():
        if u == v:
            loops[u] = loops.get(u, 0) + 1
        else:
            k = (min(u, v), max(u, v))
            mult[k] = mult.get(k, 0) + 1
    return mult, loops


def _cycle_rank(g: Multigraph, vset: frozenset[int]) -> int:
    sub = g.restrict(vset)
    return sub.num_edges - sub.num_vertices + len(sub.components())


def _connected_subsets_exact(host, available, anchor, size, budget):
    """Connected subsets of `available` containing anchor, exactly `size`."""

    def grow(s: frozenset[int], frontier: list[int], forbidden: frozenset[int]):
        budget.spend()
        if len(s) == size:
            yield s
            return
        local_forbidden = set(forbidden)
        for w in list(frontier):
            if w in local_forbidden:
                continue
            new_frontier = [
                x
                for x in frontier
                if x != w and x not in local_forbidden
            ]
            for x in sorted(host.neighbors(w)):
                if (
                    x in available
                    and x not in s
                    and x != w
                    and x not in local_forbidden
                    and x not in new_frontier
                ):
                    new_frontier.append(x)
            yield from grow(s | {w}, new_frontier, frozenset(local_forbidden))
            local_forbidden.add(w)

    start_frontier = sorted(
        x for x in host.neighbors(anchor) if x in available and x != anchor
    )
    yield from grow(frozenset([anchor]), start_frontier, frozenset())


def find_minor(
    pattern: Multigraph, host: Multigraph, *, budget: int = 5_000_000
) -> MinorModel | None:
    """Complete branch-set search for a minor model, or None.

    Branch sets are grown smallest-first with counting, degree-sum and
    connectivity pruning; every pattern edge then receives a distinct
    host edge (loops take cycle edges of their branch set).
    """
    if pattern.num_vertices > host.num_vertices or pattern.num_edges > host.num_edges:
        return None
    if is_planar(host) and not is_planar(pattern):
        return None
    bud = _Budget(budget)
    mult, ploops = _pattern_multiplicities(pattern)
    hmax = max((host.degree(v) for v in host.vertices), default=0)

    def min_size(pv: int) -> int:
        d = pattern.degree(pv)
        if d <= hmax:
            return 1
        if hmax <= 2:
            return host.num_vertices + 1  # unusable host
        return -(-(d - 2) // (hmax - 2))

    order: list[int] = []
    placed: set[int] = set()
    verts = list(pattern.vertices)
    while len(order) < len(verts):
        if not order:
            nxt = max(verts, key=lambda v: (pattern.degree(v), -v))
        else:
            nxt = max(
                (v for v in verts if v not in placed),
                key=lambda v: (
                    len(pattern.neighbors(v) & placed),
                    pattern.degree(v),
                    -v,
                ),
            )
        order.append(nxt)
        placed.add(nxt)

    mins = {v: min_size(v) for v in verts}
    if sum(mins.values()) > host.num_vertices:
        return None
    branch: dict[int, frozenset[int]] = {}
    used: set[int] = set()

    def candidate_ok(pv: int, s: frozenset[int]) -> bool:
        deg_need = pattern.degree(pv)
        if sum(host.degree(v) for v in s) < deg_need + 2 * (len(s) - 1):
            return False
        if ploops.get(pv, 0) > _cycle_rank(host, s):
            return False
        for pu in pattern.neighbors(pv):
            if pu in branch:
                need = mult[(min(pu, pv), max(pu, pv))]
                if len(host.edges_between(s, branch[pu])) < need:
                    return False
        return True

    def assign(idx: int):
        bud.spend()
        if idx == len(order):
            yield dict(branch)
            return
        pv = order[idx]
        rest_min = sum(mins[order[j]] for j in range(idx + 1, len(order)))
        avail = frozenset(v for v in host.vertices if v not in used)
        max_size = len(avail) - rest_min
        if max_size < mins[pv]:
            return
        for size in range(mins[pv], max_size + 1):
            anchors = sorted(avail)
            for anchor in anchors:
                allowed = frozenset(v for v in avail if v >= anchor)
                for s in _connected_subsets_exact(host, allowed, anchor, size, bud):
                    if not candidate_ok(pv, s):
                        continue
                    branch[pv] = s
                    used.update(s)
                    yield from assign(idx + 1)
                    used.difference_update(s)
                    del branch[pv]

    for bsets in assign(0):
        assignment: dict[int, int] = {}
        taken: set[int] = set()
        ok = True
        for pe, (pu, pv) in sorted(
            (e, pattern.ends(e)) for e in pattern.edge_ids
        ):
            if pu == pv:
                sub = host.restrict(bsets[pu])
                tree_edges = _spanning_tree_edges(sub)
                cands = [
                    e
                    for e in sub.edge_ids
                    if e not in tree_edges and e not in taken
                ]
                if not cands:
                    ok = False
                    break
                assignment[pe] = cands[0]
                taken.add(cands[0])
            else:
                cands = [
                    e
                    for e in host.edges_between(bsets[pu], bsets[pv])
                    if e not in taken
                ]
                if not cands:
                    ok = False
                    break
                assignment[pe] = cands[0]
                taken.add(cands[0])
        if not ok:
            continue
        model = MinorModel(pattern, host, bsets, assignment)
        if verify_minor_model(model):
            return model
    return None


def _spanning_tree_edges(g: Multigraph) -> set[int]:
    seen: set[int] = set()
    tree: set[int] = set()
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for e in g.incident_edges(v):
                w = g.other_end(e, v)
                if w not in seen:
                    seen.add(w)
                    tree.add(e)
                    frontier.append(w)
    return tree
