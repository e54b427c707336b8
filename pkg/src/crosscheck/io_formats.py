"""Graph serialization: JSON (native), graph6 import/export, DOT subset.

JSON is the native lossless format: {"vertices": [...], "edges":
[[edgeId, u, v], ...]}.  graph6 covers simple graphs only and loses
ids; the exporter refuses loops and parallel edges.  DOT keeps edge
ids in an attribute, so the DOT subset round-trips multigraphs.
"""

from __future__ import annotations

import json
import re

from .errors import FormatError, UnsupportedFeatureError
from .multigraph import Multigraph
from .planarity import PlaneGraph

__all__ = [
    "graph_to_json",
    "graph_from_json",
    "plane_graph_to_json",
    "to_graph6",
    "from_graph6",
    "to_dot",
    "from_dot",
    "load_graph",
    "dump_graph",
]


# -- JSON -------------------------------------------------------------------


def graph_to_json(g: Multigraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [[e, u, v] for e, u, v in g.edges()],
    }


def graph_from_json(data) -> Multigraph:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise FormatError("graph JSON needs 'vertices' and 'edges' keys")
    try:
        verts = [int(v) for v in data["vertices"]]
        edges = [(int(e), int(u), int(v)) for e, u, v in data["edges"]]
    except (TypeError, ValueError):
        raise FormatError("graph JSON entries must be integers") from None
    return Multigraph(verts, edges)


def plane_graph_to_json(pg: PlaneGraph) -> dict:
    return {
        "graph": graph_to_json(pg.graph),
        "rotation": {
            str(v): [[e, end] for e, end in ring]
            for v, ring in pg.rotation.items()
        },
        "outerFaceWalks": [
            [[e, end] for e, end in pg.faces[i]] for i in sorted(pg.outer)
        ],
    }


# -- graph6 ------------------------------------------------------------------


def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(
            chr(((n >> s) & 63) + 63) for s in (12, 6, 0)
        )
    raise UnsupportedFeatureError("graph6 export limited to 258047 vertices")


def _g6_decode_n(s: str) -> tuple[int, int]:
    if not s:
        raise FormatError("empty graph6 string")
    if s[0] != chr(126):
        return ord(s[0]) - 63, 1
    if len(s) >= 4 and s[1] != chr(126):
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        return n, 4
    raise FormatError("graph6 strings beyond 258047 vertices unsupported")


def to_graph6(g: Multigraph) -> str:
    """Export a simple graph; ids are relabelled to 0..n-1 in sorted order."""
    for e, u, v in g.edges():
        if u == v:
            raise UnsupportedFeatureError("graph6 cannot represent loops")
    if g.simplify().num_edges != g.num_edges:
        raise UnsupportedFeatureError("graph6 cannot represent parallel edges")
    order = {v: i for i, v in enumerate(g.vertices)}
    n = g.num_vertices
    adj = set()
    for _, u, v in g.edges():
        a, b = order[u], order[v]
        adj.add((min(a, b), max(a, b)))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _g6_encode_n(n) + "".join(chars)


def from_graph6(s: str) -> Multigraph:
    """Parse one graph6 line into a simple graph on vertices 0..n-1."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    n, off = _g6_decode_n(s)
    body = s[off:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise FormatError(f"graph6 body too short for {n} vertices", off)
    bits = []
    for pos, ch in enumerate(body[:need]):
        val = ord(ch) - 63
        if val < 0 or val > 63:
            raise FormatError("graph6 character out of range", off + pos)
        bits.extend((val >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    pairs = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                pairs.append((i, j))
            idx += 1
    return Multigraph.from_pairs(pairs, extra_vertices=range(n))


# -- DOT subset -----------------------------------------------------------------


def to_dot(g: Multigraph) -> str:
    lines = ["graph G {"]
    for v in g.vertices:
        lines.append(f"  {v};")
    for e, u, v in g.edges():
        lines.append(f"  {u} -- {v} [id={e}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_EDGE = re.compile(
    r"^\s*(\d+)\s*--\s*(\d+)\s*(?:\[\s*id\s*=\s*(\d+)\s*\])?\s*;?\s*$"
)
_DOT_NODE = re.compile(r"^\s*(\d+)\s*;?\s*$")


def from_dot(text: str) -> Multigraph:
    """Parse the emitted DOT subset: integer nodes, `u -- v [id=k]` edges."""
    verts: set[int] = set()
    triples: list[tuple[int, int, int]] = []
    auto = 0
    seen_ids: set[int] = set()
    in_graph = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//")[0].strip()
        if not line:
            continue
        if line.startswith("graph"):
            in_graph = True
            continue
        if line.startswith("}"):
            in_graph = False
            continue
        if not in_graph:
            raise FormatError(f"line {lineno}: content outside graph block")
        m = _DOT_EDGE.match(line)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            if m.group(3) is not None:
                eid = int(m.group(3))
            else:
                while auto in seen_ids:
                    auto += 1
                eid = auto
            if eid in seen_ids:
                raise FormatError(f"line {lineno}: duplicate edge id {eid}")
            seen_ids.add(eid)
            verts.add(u)
            verts.add(v)
            triples.append((eid, u, v))
            continue
        m = _DOT_NODE.match(line)
        if m:
            verts.add(int(m.group(1)))
            continue
        raise FormatError(f"line {lineno}: unsupported DOT syntax: {line!r}")
    return Multigraph(verts, triples)


# -- front door -------------------------------------------------------------------


def load_graph(text: str, fmt: str) -> Multigraph:
    if fmt == "json":
        return graph_from_json(text)
    if fmt == "g6":
        return from_graph6(text)
    if fmt == "dot":
        return from_dot(text)
    raise FormatError(f"unknown format {fmt!r}")


def dump_graph(g: Multigraph, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(graph_to_json(g), sort_keys=True) + "\n"
    if fmt == "g6":
        return to_graph6(g) + "\n"
    if fmt == "dot":
        return to_dot(g)
    raise FormatError(f"unknown format {fmt!r}")
