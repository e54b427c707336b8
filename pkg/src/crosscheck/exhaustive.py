"""Brute-force kernels used as independent oracles at desk scale.

Everything here trades speed for directness: definitions are executed
almost literally, so these routines double-check the optimized search
code elsewhere in the package.  All of them carry explicit budgets.
"""

from __future__ import annotations

import itertools

from .errors import BudgetExceededError
from .multigraph import Multigraph
from .planarity import darts_at, expected_planar_face_count, is_planar, trace_faces

__all__ = [
    "canonical_key",
    "are_isomorphic",
    "subgraph_isomorphic",
    "planarity_rotation_oracle",
    "disk_rotation_oracle",
    "contains_subdivision_oracle",
    "contains_minor_oracle",
    "crossing_le_oracle",
]


# -- canonical forms and isomorphism ---------------------------------------


def _encode(g: Multigraph, order: dict[int, int]) -> tuple:
    return tuple(
        sorted(
            (min(order[u], order[v]), max(order[u], order[v]))
            for _, u, v in g.edges()
        )
    )


def _refine(g: Multigraph, color: dict[int, int]) -> dict[int, int]:
    # 1-dim Weisfeiler-Leman with edge multiplicities and loop counts
    while True:
        sig = {}
        for v in g.vertices:
            ms = sorted(
                color[g.other_end(e, v)]
                for e in g.incident_edges(v)
                if not g.is_loop(e)
            )
            nloops = sum(1 for e in g.incident_edges(v) if g.is_loop(e))
            sig[v] = (color[v], nloops, tuple(ms))
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in g.vertices}
        if new == color:
            return new
        color = new


def canonical_key(g: Multigraph) -> tuple:
    """A label-independent encoding; equal keys iff isomorphic graphs."""
    n = g.num_vertices
    if n == 0:
        return (0, ())
    color = _refine(g, {v: 0 for v in g.vertices})
    best: list[tuple | None] = [None]

    def assign(col: dict[int, int]) -> None:
        classes: dict[int, list[int]] = {}
        for v, c in col.items():
            classes.setdefault(c, []).append(v)
        nonsingle = [c for c, vs in sorted(classes.items()) if len(vs) > 1]
        if not nonsingle:
            order = {
                v: i
                for i, (c, v) in enumerate(
                    sorted((c, v) for v, c in col.items())
                )
            }
            enc = _encode(g, order)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        c = nonsingle[0]
        for v in sorted(classes[c]):
            col2 = dict(col)
            col2[v] = -1 - c  # individualize below its class
            assign(_refine(g, col2))

    assign(color)
    return (n, best[0])


def are_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.num_vertices != h.num_vertices or g.num_edges != h.num_edges:
        return False
    if sorted(map(g.degree, g.vertices)) != sorted(map(h.degree, h.vertices)):
        return False
    return canonical_key(g) == canonical_key(h)


def _pair_counts(g: Multigraph) -> tuple[dict[tuple[int, int], int], dict[int, int]]:
    pairs: dict[tuple[int, int], int] = {}
    loops: dict[int, int] = {}
    for _, u, v in g.edges():
        if u == v:
            loops[u] = loops.get(u, 0) + 1
        else:
            k = (min(u, v), max(u, v))
            pairs[k] = pairs.get(k, 0) + 1
    return pairs, loops


def subgraph_isomorphic(pattern: Multigraph, host: Multigraph) -> bool:
    """Is the pattern isomorphic to a subgraph of the host (multigraph)?"""
    if pattern.num_vertices > host.num_vertices or pattern.num_edges > host.num_edges:
        return False
    ppairs, ploops = _pair_counts(pattern)
    hpairs, hloops = _pair_counts(host)
    pverts = sorted(pattern.vertices, key=lambda v: -pattern.degree(v))
    hverts = sorted(host.vertices)

    def ok_so_far(mapping: dict[int, int], v: int) -> bool:
        hv = mapping[v]
        if pattern.degree(v) > host.degree(hv):
            return False
        if ploops.get(v, 0) > hloops.get(hv, 0):
            return False
        for u in pattern.neighbors(v):
            if u in mapping:
                pk = (min(u, v), max(u, v))
                hk = (min(mapping[u], hv), max(mapping[u], hv))
                if ppairs[pk] > hpairs.get(hk, 0):
                    return False
        return True

    def go(i: int, mapping: dict[int, int], used: set[int]) -> bool:
        if i == len(pverts):
            return True
        v = pverts[i]
        for hv in hverts:
            if hv in used:
                continue
            mapping[v] = hv
            used.add(hv)
            if ok_so_far(mapping, v) and go(i + 1, mapping, used):
                return True
            del mapping[v]
            used.discard(hv)
        return False

    return go(0, {}, set())


# -- rotation-system enumeration (planarity ground truth) -------------------


def _rotation_count(g: Multigraph) -> int:
    total = 1
    for ds in darts_at(g).values():
        k = len(ds)
        total *= max(1, _fact(k - 1))
    return total


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _iter_rotations(g: Multigraph):
    ds = darts_at(g)
    verts = sorted(ds)
    pools = []
    for v in verts:
        items = ds[v]
        if len(items) <= 2:
            pools.append([tuple(items)])
        else:
            first, rest = items[0], items[1:]
            pools.append([(first, *perm) for perm in itertools.permutations(rest)])
    for combo in itertools.product(*pools):
        yield dict(zip(verts, combo))


def planarity_rotation_oracle(g: Multigraph, budget: int = 2_000_000) -> bool:
    """Planarity by enumerating every rotation system."""
    if g.num_edges == 0:
        return True
    if _rotation_count(g) > budget:
        raise BudgetExceededError("too many rotation systems")
    want = expected_planar_face_count(g)
    for rot in _iter_rotations(g):
        if len(trace_faces(g, rot)) == want:
            return True
    return False


def disk_rotation_oracle(g: Multigraph, boundary, budget: int = 2_000_000) -> bool:
    """Disk embeddability with the boundary set on the outer face.

    Ground truth for the apex reduction: looks for a planar rotation in
    which, within every component meeting the boundary, a single face
    walk carries all of that component's boundary vertices.
    """
    boundary = set(boundary)
    comps = g.components()
    if g.num_edges == 0:
        return True
    if _rotation_count(g) > budget:
        raise BudgetExceededError("too many rotation systems")
    want = expected_planar_face_count(g)
    for rot in _iter_rotations(g):
        faces = trace_faces(g, rot)
        if len(faces) != want:
            continue
        face_vsets = [
            {g.ends(d[0])[d[1]] for d in walk} for walk in faces
        ]
        good = True
        for comp in comps:
            need = comp & boundary
            if not need or not any(g.incident_edges(v) for v in comp):
                continue
            if not any(need <= vs for vs in face_vsets):
                good = False
                break
        if good:
            return True
    return False


# -- subdivision containment oracle ----------------------------------------


def _suppressible(g: Multigraph) -> list[int]:
    out = []
    for v in g.vertices:
        inc = g.incident_edges(v)
        if len(inc) == 2 and g.degree(v) == 2:
            out.append(v)
    return out


def _is_subdivision_of(s: Multigraph, pattern: Multigraph, pkey: tuple, memo: dict) -> bool:
    """Is s isomorphic to a subdivision of the pattern?

    Recursive suppression: s is a subdivision of the pattern iff it is
    isomorphic to it, or some degree-2 vertex can be suppressed to yield
    a smaller subdivision.  Length constraints (each pattern edge maps to
    a nonempty path) are respected exactly, unlike naive suppress-all.
    """
    key = canonical_key(s)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if s.num_edges == pattern.num_edges:
        res = key == pkey
    elif s.num_edges < pattern.num_edges:
        res = False
    else:
        res = any(
            _is_subdivision_of(s.suppress_vertex(v), pattern, pkey, memo)
            for v in _suppressible(s)
        )
    memo[key] = res
    return res


def contains_subdivision_oracle(
    pattern: Multigraph, host: Multigraph, budget: int = 50_000_000
) -> bool:
    """Does the host have a subgraph isomorphic to a subdivision of the pattern?

    Enumerates every edge subset of the host and tests it by recursive
    suppression, with degree-profile filters in front.
    """
    isolated = [v for v in pattern.vertices if pattern.degree(v) == 0]
    core = pattern.delete_vertices(isolated) if isolated else pattern
    if core.num_edges > host.num_edges:
        return False
    if core.num_edges == 0:
        return host.num_vertices >= pattern.num_vertices
    work = (2 ** host.num_edges) * max(1, host.num_edges)
    if work > budget:
        raise BudgetExceededError("host too large for subset enumeration")
    eids = list(host.edge_ids)
    branch_profile = sorted(d for d in map(core.degree, core.vertices) if d >= 3)
    leaf_count = sum(1 for v in core.vertices if core.degree(v) == 1)
    comp_count = len(core.components())
    pkey = canonical_key(core)
    memo: dict[tuple, bool] = {}
    spare_needed = len(isolated)
    for mask in range(1, 2 ** len(eids)):
        subset = [eids[i] for i in range(len(eids)) if mask >> i & 1]
        if len(subset) < core.num_edges:
            continue
        s = host.subgraph_of_edges(subset)
        if host.num_vertices - s.num_vertices < spare_needed:
            continue
        if s.num_vertices < core.num_vertices:
            continue
        degs = [s.degree(v) for v in s.vertices]
        if sorted(d for d in degs if d >= 3) != branch_profile:
            continue
        if sum(1 for d in degs if d == 1) != leaf_count:
            continue
        if len(s.components()) != comp_count:
            continue
        if _is_subdivision_of(s, core, pkey, memo):
            return True
    return False


# -- minor containment oracle -----------------------------------------------


def _contract_edge_set(g: Multigraph, eids) -> Multigraph:
    out = g
    for e in sorted(eids):
        if out.is_loop(e):
            continue  # endpoints already merged; contraction degenerates
        out = out.contract_edge(e)
    return out


def contains_minor_oracle(
    pattern: Multigraph, host: Multigraph, budget: int = 50_000_000
) -> bool:
    """Minor containment straight from the definition.

    A graph is a minor of another iff it can be obtained from a subgraph
    by contracting edges; equivalently the pattern must be subgraph-
    isomorphic to host/F for some contracted edge set F.
    """
    if pattern.num_vertices > host.num_vertices or pattern.num_edges > host.num_edges:
        return False
    nonloop = [e for e in host.edge_ids if not host.is_loop(e)]
    work = 2 ** len(nonloop)
    if work > budget:
        raise BudgetExceededError("host too large for contraction enumeration")
    max_f = host.num_vertices - pattern.num_vertices
    seen: set[tuple] = set()
    for size in range(0, max_f + 1):
        for fset in itertools.combinations(nonloop, size):
            contracted = _contract_edge_set(host, fset)
            if contracted.num_vertices < pattern.num_vertices:
                continue
            key = canonical_key(contracted)
            if key in seen:
                continue
            seen.add(key)
            if subgraph_isomorphic(pattern, contracted):
                return True
    return False


# -- crossing number oracle ---------------------------------------------------


def _merge_crossing(g: Multigraph, e: int, f: int) -> Multigraph:
    # subdivide both edges once and identify the two new vertices
    g1, (p,), _ = g.subdivide_edge(e, 1)
    g2, (q,), _ = g1.subdivide_edge(f, 1)
    keep, gone = min(p, q), max(p, q)
    triples = []
    for eid, u, v in g2.edges():
        u2 = keep if u == gone else u
        v2 = keep if v == gone else v
        triples.append((eid, u2, v2))
    return Multigraph((w for w in g2.vertices if w != gone), triples)


def crossing_le_oracle(g: Multigraph, c: int, budget: int = 10_000_000) -> bool:
    """Crossing number <= c by exhaustive planarization recursion.

    Tries every pair of edges sharing at most one endpoint (loops and
    parallel pairs never cross in an optimal drawing), including
    adjacent pairs, so this is strictly more generous than the
    adjacency-excluding search it checks.
    """
    state = [budget]

    def rec(h: Multigraph, left: int) -> bool:
        state[0] -= 1
        if state[0] < 0:
            raise BudgetExceededError("crossing oracle budget exhausted")
        if is_planar(h):
            return True
        if left == 0:
            return False
        eids = list(h.edge_ids)
        for i, e in enumerate(eids):
            if h.is_loop(e):
                continue
            for f in eids[i + 1 :]:
                if h.is_loop(f):
                    continue
                eu, ev = h.ends(e)
                fu, fv = h.ends(f)
                if {eu, ev} == {fu, fv}:
                    continue  # parallel pair
                if rec(_merge_crossing(h, e, f), left - 1):
                    return True
        return False

    return rec(g, c)
