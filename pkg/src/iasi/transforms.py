"""Label-preserving graph operations.

Each operation takes an arithmetic set-indexed graph, rewires the structure,
and transfers labels the natural way: merged or inserted points inherit the
edge label (the endpoint sumset), line/total constructions reuse the labels
already present. The transfer can break injectivity, so every result is
re-verified and a LabelCollisionError with the witnessing pair is raised
instead of returning a silently broken labeling.

New points need names: a contraction of (u, v) is called "(u*v)", a
subdivision point "(u~v)", a line/total point for edge (u, v) "(u,v)";
apostrophes are appended on the rare clash with an existing name.
"""

from __future__ import annotations

from itertools import combinations

from .classify import classify_arithmetic, verify_iasi
from .errors import LabelCollisionError, NotArithmeticError
from .graphs import Graph, LabeledGraph

__all__ = [
    "contract_edge",
    "reduce_topologically",
    "subdivide",
    "to_line_graph",
    "to_total_graph",
]


def _canonical(u, v):
    return (u, v) if u <= v else (v, u)


def _require_arithmetic(lg: LabeledGraph, op: str):
    report = classify_arithmetic(lg)
    if not report.is_iasi:
        raise NotArithmeticError(f"{op} requires an injective labeling: {report.collision}")
    if not report.arithmetic:
        raise NotArithmeticError(f"{op} requires an arithmetic labeling")


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def _verified(lg: LabeledGraph) -> LabeledGraph:
    report = verify_iasi(lg)
    if not report.is_iasi:
        raise LabelCollisionError(report.collision)
    return lg


def _require_edge(lg: LabeledGraph, edge) -> tuple:
    e = _canonical(*edge)
    if e not in lg.edge_labels:
        raise ValueError(f"no such edge: {e}")
    return e


def contract_edge(lg: LabeledGraph, edge) -> LabeledGraph:
    """Contract an edge; the merged vertex inherits the edge's label.

    Parallel edges arising from common neighbors collapse to one. If the
    contraction strands a vertex without edges (contracting the only edge),
    the result violates the no-isolated-vertices invariant and is rejected.
    """
    _require_arithmetic(lg, "contract_edge")
    u, v = _require_edge(lg, edge)
    merged = _fresh_name(f"({u}*{v})", set(lg.graph.vertices) - {u, v})

    vertices = [x for x in lg.graph.vertices if x not in (u, v)] + [merged]
    new_edges = set()
    for x, y in lg.graph.edges:
        if (x, y) == (u, v):
            continue
        x2 = merged if x in (u, v) else x
        y2 = merged if y in (u, v) else y
        new_edges.add(_canonical(x2, y2))

    labels = {x: lg.vertex_labels[x] for x in lg.graph.vertices if x not in (u, v)}
    labels[merged] = lg.edge_labels[(u, v)]
    return _verified(LabeledGraph(Graph(vertices, sorted(new_edges)), labels))


def reduce_topologically(lg: LabeledGraph, vertex: str) -> LabeledGraph:
    """Remove a degree-2 vertex with non-adjacent neighbors; bridge them.

    The inverse of subdivide: labels stay put and the new bridging edge gets
    the sumset of the reconnected endpoints.
    """
    _require_arithmetic(lg, "reduce_topologically")
    if vertex not in lg.vertex_labels:
        raise ValueError(f"no such vertex: {vertex!r}")
    if lg.graph.degree(vertex) != 2:
        raise ValueError(
            f"vertex {vertex!r} has degree {lg.graph.degree(vertex)}, need exactly 2"
        )
    u, w = lg.graph.neighbors(vertex)
    if lg.graph.has_edge(u, w):
        raise ValueError(f"neighbors {u!r} and {w!r} are adjacent; reduction undefined")

    vertices = [x for x in lg.graph.vertices if x != vertex]
    edges = [e for e in lg.graph.edges if vertex not in e] + [_canonical(u, w)]
    labels = {x: lg.vertex_labels[x] for x in vertices}
    return _verified(LabeledGraph(Graph(vertices, edges), labels))


def subdivide(lg: LabeledGraph, edge) -> LabeledGraph:
    """Replace an edge by a two-edge path; the new midpoint gets the edge label."""
    _require_arithmetic(lg, "subdivide")
    u, v = _require_edge(lg, edge)
    mid = _fresh_name(f"({u}~{v})", lg.graph.vertices)

    vertices = list(lg.graph.vertices) + [mid]
    edges = [e for e in lg.graph.edges if e != (u, v)]
    edges += [_canonical(u, mid), _canonical(mid, v)]
    labels = dict(lg.vertex_labels)
    labels[mid] = lg.edge_labels[(u, v)]
    return _verified(LabeledGraph(Graph(vertices, edges), labels))


def to_line_graph(lg: LabeledGraph) -> LabeledGraph:
    """The line graph, each edge becoming a vertex carrying its old label.

    Needs at least two edges (a lone edge would leave a single isolated
    point). Two new vertices are adjacent when the old edges shared an
    endpoint.
    """
    _require_arithmetic(lg, "to_line_graph")
    if len(lg.graph.edges) < 2:
        raise ValueError("line graph needs at least two edges")

    names = {}
    taken = set()
    for u, v in lg.graph.edges:
        name = _fresh_name(f"({u},{v})", taken)
        names[(u, v)] = name
        taken.add(name)

    edges = [
        _canonical(names[e1], names[e2])
        for e1, e2 in combinations(lg.graph.edges, 2)
        if set(e1) & set(e2)
    ]
    labels = {names[e]: lg.edge_labels[e] for e in lg.graph.edges}
    return _verified(LabeledGraph(Graph(list(names.values()), edges), labels))


def to_total_graph(lg: LabeledGraph) -> LabeledGraph:
    """Vertices and edges together, adjacent whenever incident or adjacent.

    Old vertices keep their labels; edge points carry the edge labels. All
    of these are vertex labels now, so a vertex label equal to an edge label
    becomes a collision here even though the original labeling was fine.
    """
    _require_arithmetic(lg, "to_total_graph")
    names = {}
    taken = set(lg.graph.vertices)
    for u, v in lg.graph.edges:
        name = _fresh_name(f"({u},{v})", taken)
        names[(u, v)] = name
        taken.add(name)

    edges = list(lg.graph.edges)
    edges += [
        _canonical(names[e1], names[e2])
        for e1, e2 in combinations(lg.graph.edges, 2)
        if set(e1) & set(e2)
    ]
    for u, v in lg.graph.edges:
        edges.append(_canonical(u, names[(u, v)]))
        edges.append(_canonical(v, names[(u, v)]))

    labels = dict(lg.vertex_labels)
    for e, name in names.items():
        labels[name] = lg.edge_labels[e]
    vertices = list(lg.graph.vertices) + list(names.values())
    return _verified(LabeledGraph(Graph(vertices, edges), labels))
