"""Lemma-suite runner: deterministic, seeded, re-runnable verification.

Each suite maps to a set of assertions over generated or cataloged
instances.  A failure records the assertion name plus the full instance
JSON, so it can be replayed standalone.  Budget exhaustion is reported
as its own failure class, never silently swallowed.
"""

from __future__ import annotations

import datetime
import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import families as fam
from .containment import c_bridges, find_minor, verify_minor_model
from .crossing import crossing_le, is_x_minimal
from .errors import BudgetExceededError, GraphError
from .instances import (
    big_flexible_context,
    certify_no_robust_cycle,
    chain_context,
    ChainSpec,
    no_robust_chain_context,
    random_chain_context,
)
from .io_formats import graph_to_json
from .multigraph import Multigraph, blocks, is_k_connected
from .planarity import cycle_order, interior_edges, is_planar
from .predicates import (
    find_robust_or_flexible,
    is_almost_4_connected,
    is_robust_cycle,
    is_t_shallow,
    iter_cycles,
    maximal_robust_or_flexible,
    find_tripod,
    verify_tripod,
    Tripod,
    internally_3_connected,
)

__all__ = ["SuiteReport", "run_suite", "SUITE_IDS", "DEFAULT_SUITES", "HEAVY_SUITES"]


@dataclass
class SuiteReport:
    suite_id: str
    seed: int
    scale: int | None
    instances_run: int
    failures: list[dict] = field(default_factory=list)
    generated_at: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        payload = {
            "suiteId": self.suite_id,
            "seed": self.seed,
            "scale": self.scale,
            "instancesRun": self.instances_run,
            "failures": self.failures,
            "generatedAt": self.generated_at,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _fail(instance_id: str, assertion: str, detail: str, g: Multigraph | None = None):
    rec = {"instance": instance_id, "assertion": assertion, "detail": detail}
    if g is not None:
        rec["instanceJson"] = graph_to_json(g)
    return rec


def _dual(g: Multigraph):  # disjoint union with fresh ids
    return g


def _disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    ov, oe = g.next_vertex_id(), g.next_edge_id()
    triples = list(g.edges()) + [
        (e + oe, u + ov, v + ov) for e, u, v in h.edges()
    ]
    return Multigraph(
        list(g.vertices) + [v + ov for v in h.vertices], triples
    )


# -- individual suites ---------------------------------------------------------


_FORMS = {
    "wheel": (fam.wheel, lambda k: (k + 1, 2 * k), 3),
    "alt-double-wheel": (fam.alt_double_wheel, lambda k: (2 * k + 2, 4 * k), 2),
    "b": (fam.b_graph, lambda k: (2 * k + 2, 4 * k + 1), 2),
    "ladder": (fam.ladder, lambda k: (2 * k, 3 * k - 2), 1),
    "w-prime": (fam.w_prime, lambda k: (2 * k - 2, 3 * k - 3), 3),
    "circular-ladder": (fam.circular_ladder, lambda k: (2 * k, 3 * k), 3),
    "mobius-ladder": (fam.mobius_ladder, lambda k: (2 * k, 3 * k), 3),
    "k4k": (fam.k4k, lambda k: (4 + k, 4 * k), 1),
    "k4k-split": (fam.k4k_split, lambda k: (2 * k + 4, 5 * k), 1),
    "k3k": (fam.k3k, lambda k: (3 + k, 3 * k), 1),
    "cycle-chords": (fam.cycle_with_distance_k_chords, lambda k: (2 * k + 1, 4 * k + 2), 2),
    "cycle-two-hubs": (fam.cycle_plus_two_hubs, lambda k: (k + 2, 3 * k + 1), 2),
}


def _suite_fam(seed: int, scale: int | None, budget: int | None):
    kmax = scale or 8
    tasks = []
    for name, (gen, form, kmin) in _FORMS.items():
        for k in range(max(kmin, 3), 13):
            tasks.append((f"count:{name}:{k}", name, gen, form, k, "count"))
    for name in ("wheel", "w-prime", "k3k"):
        gen, form, kmin = _FORMS[name]
        for k in range(max(3, kmin), kmax + 1):
            tasks.append((f"3conn:{name}:{k}", name, gen, form, k, "3conn"))
    for name in ("alt-double-wheel", "circular-ladder", "mobius-ladder", "k4k", "k4k-split"):
        gen, form, kmin = _FORMS[name]
        for k in (4, 5, 6):
            tasks.append((f"almost4:{name}:{k}", name, gen, form, k, "almost4"))
    for k in range(3, 9):
        tasks.append((f"planarity:mobius:{k}", "mobius-ladder", fam.mobius_ladder, None, k, "nonplanar"))
        tasks.append((f"planarity:circ:{k}", "circular-ladder", fam.circular_ladder, None, k, "planar"))
    for k in range(2, 9):
        tasks.append((f"planarity:adw:{k}", "alt-double-wheel", fam.alt_double_wheel, None, k, "planar"))
    tasks.append(("gadget:a4:counts", "a4-gadget", None, None, 0, "a4counts"))

    def run(task):
        iid, name, gen, form, k, kind = task
        fails = []
        if kind == "a4counts":
            g = fam.a4_gadget().graph
            if (g.num_vertices, g.num_edges) != (12, 19):
                fails.append(_fail(iid, "vertex/edge counts", f"{g.num_vertices},{g.num_edges}", g))
            return fails
        g = gen(k).graph
        if kind == "count":
            if (g.num_vertices, g.num_edges) != form(k):
                fails.append(
                    _fail(iid, "closed-form counts", f"got {g.num_vertices},{g.num_edges} want {form(k)}", g)
                )
        elif kind == "3conn":
            if not is_k_connected(g, 3):
                fails.append(_fail(iid, "3-connected", "not 3-connected", g))
        elif kind == "almost4":
            if not is_almost_4_connected(g):
                fails.append(_fail(iid, "almost-4-connected", "predicate false", g))
        elif kind == "nonplanar":
            if is_planar(g):
                fails.append(_fail(iid, "non-planarity", "unexpectedly planar", g))
        elif kind == "planar":
            if not is_planar(g):
                fails.append(_fail(iid, "planarity", "unexpectedly non-planar", g))
        return fails

    return [(t[0], (lambda tt: (lambda: run(tt)))(t)) for t in tasks]


def _suite_l16(seed: int, scale: int | None, budget: int | None):
    k = scale or 4
    bud = budget or 50_000_000
    checks = [
        ("k4k-in-split", fam.k4k(k).graph, fam.k4k_split(k).graph),
        ("chords-in-mobius", fam.cycle_with_distance_k_chords(k).graph, fam.mobius_ladder(2 * k + 1).graph),
        ("two-hubs-in-b", fam.cycle_plus_two_hubs(2 * k).graph, fam.b_graph(2 * k).graph),
    ]

    def make(iid, pat, host):
        def run():
            model = find_minor(pat, host, budget=bud)
            if model is None:
                return [_fail(iid, "minor exists", "search returned none", host)]
            if not verify_minor_model(model):
                return [_fail(iid, "minor model verifies", "invalid model", host)]
            return []

        return run

    return [(iid, make(iid, p, h)) for iid, p, h in checks]


def _context_instances(seed: int, scale: int | None, *, sizes=(16, 22, 28, 34, 40)):
    per = scale or 10
    out = []
    for size in sizes:
        for i in range(per):
            rng = random.Random(f"{seed}:ctx:{size}:{i}")
            out.append((f"ctx:{size}:{i}", rng, size))
    return out


def _suite_l42(seed: int, scale: int | None, budget: int | None):
    bud = budget or 500_000

    def make(iid, rng, size):
        def run():
            ctx = random_chain_context(rng, size)
            fails = []
            b = ctx.graph.delete_vertices(ctx.boundary)
            for eids in iter_cycles(b, budget=bud):
                ins = interior_edges(ctx.plane, eids)
                if not ins.inside_edges:
                    continue
                if is_robust_cycle(ctx, eids) is None:
                    fails.append(
                        _fail(iid, "nonfacial cycle robust", f"cycle {sorted(eids)}", ctx.graph)
                    )
            return fails

        return run

    return [(iid, make(iid, rng, size)) for iid, rng, size in _context_instances(seed, scale)]


def _no_robust_instances(seed: int, scale: int | None):
    per = scale or 8
    out = []
    for i in range(per):
        rng = random.Random(f"{seed}:nr:{i}")
        out.append((f"norobust:{i}", rng))
    return out


def _suite_l43(seed: int, scale: int | None, budget: int | None):
    bud = budget or 500_000

    def make(iid, rng):
        def run():
            ctx = no_robust_chain_context(rng, 18)
            fails = []
            b = ctx.graph.delete_vertices(ctx.boundary)
            cycles = [tuple(c) for c in iter_cycles(b, budget=bud)]
            for i in range(len(cycles)):
                for j in range(i + 1, len(cycles)):
                    if set(cycles[i]) & set(cycles[j]):
                        fails.append(
                            _fail(iid, "cycles pairwise edge-disjoint", f"{cycles[i]} vs {cycles[j]}", ctx.graph)
                        )
            for blk in blocks(b).blocks:
                if len(blk.edge_ids) <= 1:
                    continue
                sub = b.subgraph_of_edges(blk.edge_ids)
                if not all(sub.degree(v) == 2 for v in sub.vertices):
                    fails.append(
                        _fail(iid, "blocks are cycles or K<=2", f"block {sorted(blk.vertices)}", ctx.graph)
                    )
            return fails

        return run

    return [(iid, make(iid, rng)) for iid, rng in _no_robust_instances(seed, scale)]


def _end_block_pattern(ctx) -> list[str]:
    """The attachment sets N_i of the end-blocks of G minus the boundary."""
    g = ctx.graph
    b = g.delete_vertices(ctx.boundary)
    bf = blocks(b)
    problems = []
    ends = [
        (i, blk) for i, blk in enumerate(bf.blocks) if blk.is_end_block
    ]
    nsets = []
    for i, blk in ends:
        cut = bf.incidence[i]
        if len(cut) != 1:
            problems.append(f"end-block {sorted(blk.vertices)} has {len(cut)} cut vertices")
            continue
        inner = blk.vertices - cut
        n = frozenset(
            x for x in ctx.boundary if g.neighbors(x) & inner
        )
        nsets.append(n)
    for a in range(len(nsets)):
        for b2 in range(a + 1, len(nsets)):
            if len(nsets[a]) != 2 or len(nsets[b2]) != 2:
                problems.append(f"|N| != 2: {sorted(nsets[a])}, {sorted(nsets[b2])}")
            elif len(nsets[a] & nsets[b2]) != 1:
                problems.append(f"|N1 & N2| != 1: {sorted(nsets[a])}, {sorted(nsets[b2])}")
    return problems


def _suite_l44(seed: int, scale: int | None, budget: int | None):
    def make(iid, rng):
        def run():
            ctx = no_robust_chain_context(rng, 18)
            return [
                _fail(iid, "end-block attachments", msg, ctx.graph)
                for msg in _end_block_pattern(ctx)
            ]

        return run

    return [(iid, make(iid, rng)) for iid, rng in _no_robust_instances(seed, scale)]


def _suite_l45(seed: int, scale: int | None, budget: int | None):
    def make(iid, rng):
        def run():
            ctx = no_robust_chain_context(rng, 18)
            b = ctx.graph.delete_vertices(ctx.boundary)
            bf = blocks(b)
            # path test: block graph connected, all degrees <= 2, two ends
            degs = [bf.block_graph_degree(i) for i in range(len(bf.blocks))]
            cut_deg: dict[int, int] = {}
            for i, cvs in bf.incidence.items():
                for cv in cvs:
                    cut_deg[cv] = cut_deg.get(cv, 0) + 1
            fails = []
            if any(d > 2 for d in degs) or any(d > 2 for d in cut_deg.values()):
                fails.append(_fail(iid, "block graph is a path", f"degrees {degs}", ctx.graph))
            if sum(1 for d in degs if d == 1) not in (0, 2):
                fails.append(_fail(iid, "block graph is a path", "wrong number of leaves", ctx.graph))
            return fails

        return run

    return [(iid, make(iid, rng)) for iid, rng in _no_robust_instances(seed, scale)]


def _suite_l46(seed: int, scale: int | None, budget: int | None):
    per = scale or 3
    bud = budget or 500_000

    def make(iid, ncomp):
        def run():
            ctx = big_flexible_context(ncomp)
            if ctx.graph.num_vertices < 130:
                return [_fail(iid, "instance size", "below 130 vertices", ctx.graph)]
            res = find_robust_or_flexible(ctx, budget=bud)
            if res is None:
                return [_fail(iid, "robust or flexible exists", "search returned none", ctx.graph)]
            return []

        return run

    return [
        (f"big:{i}", make(f"big:{i}", 43 + 2 * i)) for i in range(per)
    ]


def _suite_l47(seed: int, scale: int | None, budget: int | None):
    per = scale or 3
    bud = budget or 500_000

    def bridge_property(ctx, eids) -> bool:
        ins = interior_edges(ctx.plane, eids).inside_edges
        vset = set(cycle_order(ctx.graph, eids)[0])
        return all(
            b.edges <= ins or (b.vertices - vset) & set(ctx.boundary)
            for b in c_bridges(ctx.graph, eids)
        )

    def make(iid, builder):
        def run():
            ctx = builder()
            try:
                eids, kind, wit = maximal_robust_or_flexible(ctx, budget=bud)
            except GraphError:
                return [_fail(iid, "maximal witness exists", "no robust/flexible cycle", ctx.graph)]
            if not bridge_property(ctx, eids):
                return [_fail(iid, "bridge containment at maximal witness", f"cycle {sorted(eids)}", ctx.graph)]
            return []

        return run

    tasks = []
    for i in range(per):
        tasks.append(
            (f"small:{i}", make(f"small:{i}", lambda i=i: random_chain_context(
                random.Random(f"{seed}:47:{i}"), 20
            )))
        )
    tasks.append(("big:0", make("big:0", lambda: big_flexible_context(43))))
    return tasks


def _xmin_catalog():
    k5 = fam.complete(5)
    k33 = fam.complete_bipartite(3, 3)
    kk = _disjoint_union(k5, k5)
    k5s, _, _ = k5.subdivide_edge(0, 1)
    subdiv = _disjoint_union(k5s, k5)
    base = k5.delete_edge(0)
    w = base.next_vertex_id()
    base = base.add_vertex(w)
    ne = base.next_edge_id()
    base = (
        base.add_edge(ne, 0, w)
        .add_edge(ne + 1, 0, w)
        .add_edge(ne + 2, 1, w)
        .add_edge(ne + 3, 1, w)
    )
    gadget = _disjoint_union(base, k5)
    k33k33 = _disjoint_union(k33, k33)
    return [
        ("k5", k5, False, "i"),
        ("k5+k5", kk, True, None),
        ("k33+k33", k33k33, True, None),
        ("k5subdiv+k5", subdiv, False, "iii"),
        ("parallel-gadget+k5", gadget, False, "iv"),
    ]


def _suite_xmin(seed: int, scale: int | None, budget: int | None):
    bud = budget or 500_000

    def make(iid, g, verdict, cond):
        def run():
            rep = is_x_minimal(g, budget=bud)
            fails = []
            if rep.verdict != verdict:
                fails.append(_fail(iid, "x-minimality verdict", f"got {rep.verdict}", g))
            if rep.failed_condition != cond:
                fails.append(
                    _fail(iid, "failed condition", f"got {rep.failed_condition} want {cond}", g)
                )
            return fails

        return run

    return [(iid, make(iid, g, v, c)) for iid, g, v, c in _xmin_catalog()]


def _suite_l51(seed: int, scale: int | None, budget: int | None):
    bud = budget or 500_000

    def make(iid, g, verdict, cond):
        def run():
            rep = is_x_minimal(g, budget=bud)
            fails = []
            if rep.verdict and g.num_vertices >= 17 and not is_k_connected(g, 3):
                fails.append(
                    _fail(iid, "x-minimal with >=17 vertices is 3-connected", "counterexample", g)
                )
            if rep.verdict != verdict:
                fails.append(_fail(iid, "catalog verdict", f"got {rep.verdict}", g))
            return fails

        return run

    return [(iid, make(iid, g, v, c)) for iid, g, v, c in _xmin_catalog()]


def _suite_l57(seed: int, scale: int | None, budget: int | None):
    bud = budget or 500_000

    def run():
        lg = fam.a4_gadget()
        g = lg.graph
        fails = []
        if crossing_le(g, 1, budget=bud) is not None:
            fails.append(_fail("a4", "crossing number at least two", "found <=1 drawing", g))
        planar_dels = [e for e in g.edge_ids if is_planar(g.delete_edge(e))]
        if planar_dels != [fam.linking_edge(lg)]:
            fails.append(
                _fail("a4", "unique planarizing deletion", f"got {planar_dels}", g)
            )
        return fails

    return [("a4", run)]


def _suite_tripod(seed: int, scale: int | None, budget: int | None):
    from .instances import random_simple_graph

    per = scale or 30
    bud = budget or 2_000_000

    def make(iid, rng):
        def run():
            n = rng.randint(6, 10)
            m = rng.randint(n + 2, min(2 * n + 2, n * (n - 1) // 2))
            g = random_simple_graph(rng, n, m)
            feet = rng.sample(range(n), 3)
            if not internally_3_connected(g, *feet):
                return []  # precondition screening; not counted as failure
            out = find_tripod(g, *feet, budget=bud)
            if isinstance(out, Tripod) and not verify_tripod(g, out):
                return [_fail(iid, "tripod invariants", "verification failed", g)]
            return []

        return run

    return [
        (f"dichotomy:{i}", make(f"dichotomy:{i}", random.Random(f"{seed}:tri:{i}")))
        for i in range(per)
    ]


def _suite_cr3(seed: int, scale: int | None, budget: int | None):
    bud = budget or 5_000_000

    def run():
        k6 = fam.complete(6)
        fails = []
        if crossing_le(k6, 2, budget=bud) is not None:
            fails.append(_fail("k6", "crossing number above two", "found <=2 drawing", k6))
        cert = crossing_le(k6, 3, budget=bud)
        if cert is None:
            fails.append(_fail("k6", "three crossings suffice", "no certificate", k6))
        return fails

    return [("k6", run)]


_SUITES = {
    "FAM": _suite_fam,
    "L1.6": _suite_l16,
    "L4.2": _suite_l42,
    "L4.3": _suite_l43,
    "L4.4": _suite_l44,
    "L4.5": _suite_l45,
    "L4.6": _suite_l46,
    "L4.7": _suite_l47,
    "L5.1": _suite_l51,
    "L5.7": _suite_l57,
    "XMIN": _suite_xmin,
    "TRIPOD": _suite_tripod,
    "CR3": _suite_cr3,
}

SUITE_IDS = tuple(_SUITES)
DEFAULT_SUITES = (
    "FAM",
    "L1.6",
    "L4.2",
    "L4.3",
    "L4.4",
    "L4.5",
    "L4.6",
    "L4.7",
    "L5.1",
    "L5.7",
    "XMIN",
)
HEAVY_SUITES = ("TRIPOD", "CR3")


def run_suite(
    suite_id: str,
    seed: int = 0,
    scale: int | None = None,
    budget: int | None = None,
    workers: int = 1,
) -> SuiteReport:
    """Execute one suite deterministically for (seed, scale)."""
    if suite_id not in _SUITES:
        raise GraphError(f"unknown suite {suite_id!r}; known: {', '.join(SUITE_IDS)}")
    tasks = _SUITES[suite_id](seed, scale, budget)

    def guarded(item):
        iid, fn = item
        try:
            return list(fn())
        except BudgetExceededError as exc:
            return [_fail(iid, "budget", str(exc))]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(guarded, tasks))
    else:
        results = [guarded(t) for t in tasks]
    failures = [f for rs in results for f in rs]
    failures.sort(key=lambda f: (f["instance"], f["assertion"]))
    return SuiteReport(
        suite_id=suite_id,
        seed=seed,
        scale=scale,
        instances_run=len(tasks),
        failures=failures,
        generated_at=datetime.datetime.now(datetime.timezone.utc).isoformat(),
    )
