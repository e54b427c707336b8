"""Instance builders for the verification suites and sampled tests.

The chain contexts follow a fixed blueprint: components strung along cut
edges, the first marked vertex attached to the leftmost component, the
second to the rightmost, the third to every component.  Component shapes
control which cycles exist; triangles keep the boundary-free part facial
while the wheel shape plants a non-facial cycle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GraphError
from .multigraph import Multigraph
from .predicates import BoundaryContext, is_robust_cycle, iter_cycles

__all__ = [
    "ChainSpec",
    "chain_context",
    "random_chain_context",
    "no_robust_chain_context",
    "big_flexible_context",
    "certify_no_robust_cycle",
    "random_multigraph",
    "random_simple_graph",
]

X1, X2, X3 = 0, 1, 2


@dataclass(frozen=True)
class ChainSpec:
    """Component shapes, left to right: each one of single, tri, wheel."""

    shapes: tuple[str, ...]

    def vertex_count(self) -> int:
        per = {"single": 1, "tri": 3, "wheel": 5}
        return 3 + sum(per[s] for s in self.shapes)


def chain_context(spec: ChainSpec) -> BoundaryContext:
    """Build the chain instance for a component blueprint.

    Each component exposes a left port, a right port and a marked-vertex
    port; cut edges join consecutive right/left ports; the third marked
    vertex sees every component's port.
    """
    if len(spec.shapes) < 1:
        raise GraphError("chain needs at least one component")
    verts = [X1, X2, X3]
    pairs: list[tuple[int, int]] = []
    nxt = 3
    lefts: list[int] = []
    rights: list[int] = []
    ports: list[int] = []
    for shape in spec.shapes:
        if shape == "single":
            v = nxt
            nxt += 1
            verts.append(v)
            lefts.append(v)
            rights.append(v)
            ports.append(v)
        elif shape == "tri":
            b, s, a = nxt, nxt + 1, nxt + 2
            nxt += 3
            verts += [b, s, a]
            pairs += [(b, s), (s, a), (a, b)]
            lefts.append(b)
            rights.append(a)
            ports.append(s)
        elif shape == "wheel":
            b, p, a, q, w = nxt, nxt + 1, nxt + 2, nxt + 3, nxt + 4
            nxt += 5
            verts += [b, p, a, q, w]
            pairs += [(b, p), (p, a), (a, q), (q, b)]
            pairs += [(w, b), (w, p), (w, a), (w, q)]
            lefts.append(b)
            rights.append(a)
            ports.append(q)
        else:
            raise GraphError(f"unknown component shape {shape!r}")
    for i in range(len(spec.shapes) - 1):
        pairs.append((rights[i], lefts[i + 1]))
    pairs.append((X1, lefts[0]))
    pairs.append((X2, rights[-1]))
    for s in ports:
        pairs.append((X3, s))
    g = Multigraph.from_pairs(pairs, extra_vertices=verts)
    return BoundaryContext.build(g, X1, X2, X3)


def random_chain_context(
    rng: random.Random, target_vertices: int, *, allow_wheel: bool = True
) -> BoundaryContext:
    """A chain context with roughly the requested vertex count."""
    shapes: list[str] = []
    count = 3
    choices = ["tri", "single", "wheel"] if allow_wheel else ["tri", "single"]
    while count < target_vertices - 1:
        shape = rng.choice(choices)
        if shapes and count + {"single": 1, "tri": 3, "wheel": 5}[shape] > target_vertices:
            shape = "single"
        shapes.append(shape)
        count += {"single": 1, "tri": 3, "wheel": 5}[shape]
    if len(shapes) < 2:
        shapes = ["tri", "tri"]
    return chain_context(ChainSpec(tuple(shapes)))


def certify_no_robust_cycle(ctx: BoundaryContext, *, budget: int = 200_000) -> bool:
    """Exhaustive scan: no cycle of the graph is robust."""
    for eids in iter_cycles(ctx.graph, budget=budget):
        if is_robust_cycle(ctx, eids) is not None:
            return False
    return True


def no_robust_chain_context(
    rng: random.Random, target_vertices: int, *, max_tries: int = 20
) -> BoundaryContext:
    """A certified robust-cycle-free chain instance of about the given size."""
    for _ in range(max_tries):
        ctx = random_chain_context(rng, target_vertices, allow_wheel=False)
        if certify_no_robust_cycle(ctx):
            return ctx
    raise GraphError("could not generate a robust-free instance")


def big_flexible_context(num_components: int = 43) -> BoundaryContext:
    """An all-triangle chain; 43 components give 132 vertices."""
    return chain_context(ChainSpec(("tri",) * num_components))


# -- random graphs for sampled oracle-agreement tests -----------------------


def random_simple_graph(rng: random.Random, n: int, m: int) -> Multigraph:
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    m = min(m, len(all_pairs))
    picked = rng.sample(all_pairs, m)
    return Multigraph.from_pairs(sorted(picked), extra_vertices=range(n))


def random_multigraph(
    rng: random.Random,
    n: int,
    m: int,
    *,
    loop_prob: float = 0.08,
    parallel_prob: float = 0.15,
) -> Multigraph:
    """A random multigraph: mostly simple edges, some loops and parallels."""
    pairs: list[tuple[int, int]] = []
    for _ in range(m):
        r = rng.random()
        if r < loop_prob:
            v = rng.randrange(n)
            pairs.append((v, v))
        elif r < loop_prob + parallel_prob and pairs:
            pairs.append(rng.choice(pairs))
        else:
            a = rng.randrange(n)
            b = rng.randrange(n)
            if a == b:
                b = (b + 1) % n
            pairs.append((min(a, b), max(a, b)))
    return Multigraph.from_pairs(pairs, extra_vertices=range(n))
