"""Shared test utilities: small graph builders and slow reference checks."""

from __future__ import annotations

import itertools

from crosscheck.multigraph import Multigraph


def disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    ov, oe = g.next_vertex_id(), g.next_edge_id()
    triples = list(g.edges()) + [(e + oe, u + ov, v + ov) for e, u, v in h.edges()]
    return Multigraph(list(g.vertices) + [v + ov for v in h.vertices], triples)


def edge_between(g: Multigraph, u: int, v: int) -> int:
    for e, a, b in g.edges():
        if {a, b} == {u, v}:
            return e
    raise AssertionError(f"no edge {u}-{v}")


def separations_by_subsets(g: Multigraph, max_order: int):
    """Independent enumeration straight from the definition.

    Every pair (A, B) with A union B = V arises as B = (V - A) | M for a
    subset M of A, and then A & B = M.  Each candidate is checked by a
    direct edge scan.
    """
    verts = list(g.vertices)
    vset = frozenset(verts)
    n = len(verts)
    found = set()
    for mask_a in range(2**n):
        a = frozenset(verts[i] for i in range(n) if mask_a >> i & 1)
        a_list = sorted(a)
        for size in range(0, max_order + 1):
            for m in itertools.combinations(a_list, size):
                b = (vset - a) | frozenset(m)
                if not (a - b) or not (b - a):
                    continue
                crossing = any(
                    (u in a - b and v in b - a) or (u in b - a and v in a - b)
                    for _, u, v in g.edges()
                )
                if crossing:
                    continue
                key = (min(a, b, key=sorted), max(a, b, key=sorted))
                found.add(key)
    return found


def vertex_cut_free(g: Multigraph, k: int) -> bool:
    """Subset brute force: no cut of size < k disconnects g."""
    verts = list(g.vertices)
    if not g.is_connected():
        return False
    for size in range(0, k):
        for s in itertools.combinations(verts, size):
            rest = [v for v in verts if v not in s]
            if not rest:
                continue
            comp = g.component_of(rest[0], forbidden_vertices=s)
            if len(comp) != len(rest):
                return False
    return True
