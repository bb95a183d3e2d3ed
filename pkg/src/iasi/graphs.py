"""Simple graphs and set-valued vertex labelings.

Graphs are undirected, loop-free, without parallel edges, and (by this
package's convention) without isolated vertices, since an unlabeled edge
endpoint is the only thing a labeling can act on. Vertex identifiers are
opaque strings; every ordering in reports and serialization is plain
lexicographic so output is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import GraphValidationError, InvalidLabelingError
from .sets import IntegerSet, detect_ap, sumset

__all__ = [
    "GraphViolation",
    "find_graph_violations",
    "Graph",
    "validate_graph",
    "LabeledGraph",
    "induce_edge_labels",
    "IndexSummary",
    "summarize_indices",
]


@dataclass(frozen=True)
class GraphViolation:
    kind: str  # self-loop | duplicate-edge | duplicate-vertex | isolated-vertex | dangling-endpoint
    element: tuple | str

    def __str__(self):
        return f"{self.kind} at {self.element!r}"


def _canonical_edge(u, v):
    return (u, v) if u <= v else (v, u)


def find_graph_violations(vertices, edges) -> list[GraphViolation]:
    """Collect every simple-graph violation in the raw data.

    Checks: duplicate vertex ids, self-loops, duplicate edges (in either
    orientation), endpoints naming no vertex, and vertices left without any
    valid incident edge.
    """
    violations = []
    vertices = list(vertices)
    vset = set(vertices)
    if len(vset) != len(vertices):
        seen = set()
        for v in vertices:
            if v in seen:
                violations.append(GraphViolation("duplicate-vertex", v))
            seen.add(v)

    seen_edges = set()
    touched = set()
    for raw in edges:
        u, v = raw
        if u == v:
            violations.append(GraphViolation("self-loop", (u, v)))
            continue
        dangling = False
        for end in (u, v):
            if end not in vset:
                violations.append(GraphViolation("dangling-endpoint", (u, v)))
                dangling = True
        if dangling:
            continue
        e = _canonical_edge(u, v)
        if e in seen_edges:
            violations.append(GraphViolation("duplicate-edge", e))
            continue
        seen_edges.add(e)
        touched.update(e)

    for v in sorted(vset):
        if v not in touched:
            violations.append(GraphViolation("isolated-vertex", v))
    return violations


class Graph:
    """An immutable simple graph with canonical (lexicographic) ordering.

    Construction validates the data and raises GraphValidationError with the
    full violation list on bad input. Edges are stored as ordered pairs
    (u, v) with u < v.
    """

    __slots__ = ("vertices", "edges", "_adjacency")

    def __init__(self, vertices, edges):
        violations = find_graph_violations(vertices, edges)
        if violations:
            raise GraphValidationError(violations)
        self.vertices = tuple(sorted(set(vertices)))
        self.edges = tuple(sorted(_canonical_edge(u, v) for u, v in edges))
        adjacency = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._adjacency = {v: tuple(sorted(ns)) for v, ns in adjacency.items()}

    def neighbors(self, v) -> tuple:
        return self._adjacency[v]

    def degree(self, v) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u, v) -> bool:
        return _canonical_edge(u, v) in set(self.edges)

    def components(self) -> list[tuple]:
        """Connected components, each sorted, ordered by smallest vertex."""
        unseen = set(self.vertices)
        out = []
        for root in self.vertices:
            if root not in unseen:
                continue
            queue = deque([root])
            unseen.discard(root)
            comp = [root]
            while queue:
                cur = queue.popleft()
                for nb in self._adjacency[cur]:
                    if nb in unseen:
                        unseen.discard(nb)
                        comp.append(nb)
                        queue.append(nb)
            out.append(tuple(sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def graph_id(self) -> str:
        """Canonical edge-list string; no vertex escapes it (none isolated)."""
        return ",".join(f"{u}-{v}" for u, v in self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(|V|={len(self.vertices)}, edges={self.graph_id()!r})"


def validate_graph(vertices, edges) -> Graph:
    """Canonicalize raw vertex/edge data into a Graph or raise with all violations."""
    return Graph(vertices, edges)


class LabeledGraph:
    """A graph together with a total set-valued vertex labeling.

    Edge labels are always the induced sumsets of the endpoint labels and
    are computed here once; there is no way to store anything else. The
    labeling need not be injective -- deciding that is the verifier's job.
    """

    __slots__ = ("graph", "vertex_labels", "edge_labels")

    def __init__(self, graph: Graph, vertex_labels):
        missing = [v for v in graph.vertices if v not in vertex_labels]
        if missing:
            raise InvalidLabelingError(f"no label for vertex {missing[0]!r}")
        labels = {}
        for v in graph.vertices:
            label = IntegerSet(vertex_labels[v])
            if not label:
                raise InvalidLabelingError(f"empty label for vertex {v!r}")
            labels[v] = label
        self.graph = graph
        self.vertex_labels = labels
        self.edge_labels = {
            (u, v): sumset(labels[u], labels[v]) for u, v in graph.edges
        }

    def label(self, v) -> IntegerSet:
        return self.vertex_labels[v]

    def edge_label(self, u, v=None) -> IntegerSet:
        e = _canonical_edge(*u) if v is None else _canonical_edge(u, v)
        return self.edge_labels[e]

    def relabel(self, changes) -> "LabeledGraph":
        """A copy with some vertex labels replaced."""
        labels = dict(self.vertex_labels)
        labels.update(changes)
        return LabeledGraph(self.graph, labels)

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.graph == other.graph and self.vertex_labels == other.vertex_labels

    def __hash__(self):
        return hash((self.graph, tuple(sorted(self.vertex_labels.items()))))

    def __repr__(self):
        return f"LabeledGraph({self.graph!r})"


def induce_edge_labels(graph: Graph, vertex_labels) -> LabeledGraph:
    """Attach a total labeling to ``graph``; every edge gets the endpoint sumset."""
    return LabeledGraph(graph, vertex_labels)


@dataclass(frozen=True)
class IndexSummary:
    """Cardinalities and common differences of every label in one place.

    Deterministic indices (the common differences) are present exactly for
    labels that are progressions of two or more elements; singletons and
    non-progressions carry None.
    """

    vertex_indexing_numbers: dict
    edge_indexing_numbers: dict
    vertex_deterministic_indices: dict
    edge_deterministic_indices: dict


def _deterministic_index(label: IntegerSet):
    ap = detect_ap(label)
    if ap is None:
        return None
    return ap.difference  # None for singletons


def summarize_indices(lg: LabeledGraph) -> IndexSummary:
    return IndexSummary(
        vertex_indexing_numbers={v: len(s) for v, s in lg.vertex_labels.items()},
        edge_indexing_numbers={e: len(s) for e, s in lg.edge_labels.items()},
        vertex_deterministic_indices={
            v: _deterministic_index(s) for v, s in lg.vertex_labels.items()
        },
        edge_deterministic_indices={
            e: _deterministic_index(s) for e, s in lg.edge_labels.items()
        },
    )
