"""Labeling documents (JSON) and DOT export.

Document layout::

    {
      "graph": {"vertices": ["u", "v"], "edges": [["u", "v"]]},
      "labels": {"u": [0, 1, 2], "v": [3, 5, 7]},
      "metadata": {"seed": 7, "...": "..."}
    }

"labels" may be omitted for bare graphs (construction input). Unknown
fields anywhere are rejected; label arrays must be ascending and are
normalized with a warning when they are not. Serialization is canonical,
so saving what was loaded is byte-stable.
"""

from __future__ import annotations

import json
import warnings

from .errors import SchemaError
from .graphs import Graph, LabeledGraph

__all__ = [
    "load_document",
    "load_graph",
    "save_document",
    "document_dict",
    "document_text",
    "export_dot",
    "dot_text",
]


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(
            f"malformed JSON: {exc.msg}", context=f"{path}:{exc.lineno}:{exc.colno}"
        ) from exc


def _check_fields(obj, allowed, required, where):
    if not isinstance(obj, dict):
        raise SchemaError(f"expected an object, got {type(obj).__name__}", context=where)
    for key in obj:
        if key not in allowed:
            raise SchemaError(f"unknown field {key!r}", context=where)
    for key in required:
        if key not in obj:
            raise SchemaError(f"missing field {key!r}", context=where)


def _parse_graph(doc) -> Graph:
    _check_fields(doc, {"graph", "labels", "metadata"}, {"graph"}, "document")
    gobj = doc["graph"]
    _check_fields(gobj, {"vertices", "edges"}, {"vertices", "edges"}, "graph")
    vertices = gobj["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) and v for v in vertices):
        raise SchemaError("vertices must be a list of nonempty strings", context="graph.vertices")
    edges = gobj["edges"]
    if not isinstance(edges, list):
        raise SchemaError("edges must be a list", context="graph.edges")
    vset = set(vertices)
    parsed = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise SchemaError("each edge must be a pair of strings", context=f"graph.edges[{i}]")
        for x in e:
            if x not in vset:
                raise SchemaError(
                    f"edge {e} names unknown vertex {x!r}", context=f"graph.edges[{i}]"
                )
        parsed.append(tuple(e))
    return Graph(vertices, parsed)


def _parse_labels(doc, graph: Graph) -> dict:
    if "labels" not in doc:
        raise SchemaError("missing field 'labels'", context="document")
    lobj = doc["labels"]
    if not isinstance(lobj, dict):
        raise SchemaError("labels must be an object", context="labels")
    vset = set(graph.vertices)
    labels = {}
    for v, arr in lobj.items():
        if v not in vset:
            raise SchemaError(f"label for unknown vertex {v!r}", context="labels")
        if not isinstance(arr, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in arr
        ):
            raise SchemaError("label must be a list of integers", context=f"labels.{v}")
        if any(x < 0 for x in arr):
            raise SchemaError("label elements must be non-negative", context=f"labels.{v}")
        normalized = sorted(set(arr))
        if normalized != arr:
            warnings.warn(
                f"label array for {v!r} was not strictly ascending; normalized",
                stacklevel=3,
            )
        labels[v] = normalized
    return labels


def load_document(path) -> LabeledGraph:
    """Parse a labeling document; schema problems name the offending field."""
    doc = _read_json(path)
    graph = _parse_graph(doc)
    return LabeledGraph(graph, _parse_labels(doc, graph))


def load_graph(path) -> Graph:
    """Parse only the graph section (labels, if present, are ignored)."""
    return _parse_graph(_read_json(path))


def document_dict(lg: LabeledGraph, metadata=None) -> dict:
    doc = {
        "graph": {
            "vertices": list(lg.graph.vertices),
            "edges": [list(e) for e in lg.graph.edges],
        },
        "labels": {v: list(lg.vertex_labels[v]) for v in lg.graph.vertices},
    }
    if metadata is not None:
        doc["metadata"] = metadata
    return doc


def document_text(lg: LabeledGraph, metadata=None) -> str:
    return json.dumps(document_dict(lg, metadata), indent=2, sort_keys=False) + "\n"


def save_document(lg: LabeledGraph, path, metadata=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(document_text(lg, metadata))


def _format_set(label) -> str:
    return "{%s}" % ",".join(str(e) for e in label)


def dot_text(lg: LabeledGraph) -> str:
    """Graphviz source with one node/edge line per element, label attributes set."""
    lines = ["graph G {"]
    for v in lg.graph.vertices:
        lines.append(f'  "{v}" [label="{_format_set(lg.vertex_labels[v])}"];')
    for u, v in lg.graph.edges:
        lines.append(f'  "{u}" -- "{v}" [label="{_format_set(lg.edge_labels[(u, v)])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(lg: LabeledGraph, path):
    """Write DOT; output is canonical, so re-export is byte-identical."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dot_text(lg))
