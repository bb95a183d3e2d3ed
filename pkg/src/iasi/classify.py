"""Verification and classification of set-valued labelings.

A labeling is an integer additive set-indexer (IASI) when the vertex labels
are pairwise distinct and the induced edge labels are pairwise distinct. On
top of that, edges are graded by cardinality (weak = the edge label is no
bigger than its larger endpoint, strong = it reaches the product bound) and
the labeling is graded by progression structure (vertex-/edge-/fully
arithmetic). Classification never refuses a non-injective labeling; it just
flags it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DisconnectedGraphError, NotArithmeticError
from .graphs import LabeledGraph
from .sets import detect_ap

__all__ = [
    "Collision",
    "InjectivityReport",
    "verify_iasi",
    "EdgeClassification",
    "classify_edges",
    "check_uniformity",
    "ClassificationReport",
    "classify_arithmetic",
    "MultiplierViolation",
    "MultiplierReport",
    "check_multiplier_condition",
    "GcdReport",
    "check_gcd_invariant",
    "check_gcd_invariant_components",
    "check_singleton_endpoint_rule",
]

# Vertex labels shorter than this cannot count as arithmetic; progressions
# of one or two elements are degenerate ("sub-minimal") cases.
MIN_ARITHMETIC_LENGTH = 3


@dataclass(frozen=True)
class Collision:
    """Two distinct elements sharing one label."""

    kind: str  # "vertex" | "edge"
    first: object
    second: object
    label: tuple

    def __str__(self):
        return f"{self.kind}s {self.first!r} and {self.second!r} share label {set(self.label)}"


@dataclass(frozen=True)
class InjectivityReport:
    is_iasi: bool
    collision: Collision | None


def _first_collision(items, kind):
    seen = {}
    for name, label in items:
        if label in seen:
            return Collision(kind, seen[label], name, tuple(label))
        seen[label] = name
    return None


def verify_iasi(lg: LabeledGraph) -> InjectivityReport:
    """Decide IASI-ness: vertex labels injective and edge labels injective.

    The first collision in canonical order is returned as the witness.
    """
    collision = _first_collision(sorted(lg.vertex_labels.items()), "vertex")
    if collision is None:
        collision = _first_collision(sorted(lg.edge_labels.items()), "edge")
    return InjectivityReport(is_iasi=collision is None, collision=collision)


@dataclass(frozen=True)
class EdgeClassification:
    weak: bool
    strong: bool
    indexing_number: int


def classify_edges(lg: LabeledGraph) -> dict:
    """Per-edge weak/strong flags and edge label cardinality.

    weak: |f(u)+f(v)| == max(|f(u)|, |f(v)|); strong: == |f(u)|*|f(v)|.
    Both can hold at once (singleton against anything).
    """
    out = {}
    for (u, v), label in lg.edge_labels.items():
        m, n = len(lg.vertex_labels[u]), len(lg.vertex_labels[v])
        size = len(label)
        out[(u, v)] = EdgeClassification(
            weak=size == max(m, n), strong=size == m * n, indexing_number=size
        )
    return out


def check_uniformity(lg: LabeledGraph) -> tuple[int | None, int | None]:
    """(k, l): the common edge label size and common vertex label size, if any."""
    edge_sizes = {len(s) for s in lg.edge_labels.values()}
    vertex_sizes = {len(s) for s in lg.vertex_labels.values()}
    k = edge_sizes.pop() if len(edge_sizes) == 1 else None
    l = vertex_sizes.pop() if len(vertex_sizes) == 1 else None
    return k, l


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the classifier can say about one labeling.

    ``arithmetic`` = all vertex labels are progressions of >= 3 elements and
    all edge labels are progressions. ``semi_arithmetic`` keeps the vertex
    half but loses the edge half: by default at least one edge label is not
    a progression; under the strict reading none is.

    Non-injective labelings are still classified; ``is_iasi`` is the flag to
    check before trusting anything else.
    """

    is_iasi: bool
    collision: Collision | None
    per_edge: dict
    uniform_k: int | None
    vertex_uniform_l: int | None
    vertex_arithmetic: bool
    edge_arithmetic: bool
    arithmetic: bool
    semi_arithmetic: bool
    sub_minimal_vertices: tuple


def classify_arithmetic(lg: LabeledGraph, strict_semi: bool = False) -> ClassificationReport:
    injectivity = verify_iasi(lg)
    per_edge = classify_edges(lg)
    uniform_k, vertex_uniform_l = check_uniformity(lg)

    vertex_aps = {v: detect_ap(s) for v, s in lg.vertex_labels.items()}
    sub_minimal = tuple(
        v
        for v in sorted(lg.vertex_labels)
        if vertex_aps[v] is not None and len(lg.vertex_labels[v]) < MIN_ARITHMETIC_LENGTH
    )
    vertex_arithmetic = all(
        ap is not None and ap.length >= MIN_ARITHMETIC_LENGTH for ap in vertex_aps.values()
    )
    edge_ap_flags = [detect_ap(s) is not None for s in lg.edge_labels.values()]
    edge_arithmetic = all(edge_ap_flags)
    if strict_semi:
        semi = vertex_arithmetic and not any(edge_ap_flags)
    else:
        semi = vertex_arithmetic and not edge_arithmetic

    return ClassificationReport(
        is_iasi=injectivity.is_iasi,
        collision=injectivity.collision,
        per_edge=per_edge,
        uniform_k=uniform_k,
        vertex_uniform_l=vertex_uniform_l,
        vertex_arithmetic=vertex_arithmetic,
        edge_arithmetic=edge_arithmetic,
        arithmetic=vertex_arithmetic and edge_arithmetic,
        semi_arithmetic=semi,
        sub_minimal_vertices=sub_minimal,
    )


@dataclass(frozen=True)
class MultiplierViolation:
    edge: tuple
    low_difference: int
    high_difference: int
    multiplier: int | None  # None when the differences are not multiples
    bound: int

    def __str__(self):
        if self.multiplier is None:
            return (
                f"edge {self.edge}: difference {self.high_difference} is not a "
                f"multiple of {self.low_difference}"
            )
        return (
            f"edge {self.edge}: multiplier {self.multiplier} exceeds the "
            f"cardinality bound {self.bound}"
        )


@dataclass(frozen=True)
class MultiplierReport:
    ok: bool
    violations: tuple
    sub_minimal_vertices: tuple


def _vertex_differences(lg: LabeledGraph) -> dict:
    diffs = {}
    for v, label in sorted(lg.vertex_labels.items()):
        ap = detect_ap(label)
        if ap is None or ap.difference is None:
            raise NotArithmeticError(
                f"vertex {v!r} has no deterministic index: label {set(label)} is "
                "not a progression of two or more elements"
            )
        diffs[v] = ap.difference
    return diffs


def check_multiplier_condition(lg: LabeledGraph) -> MultiplierReport:
    """Check every edge's difference ratio against its cardinality bound.

    For an edge whose endpoint differences are d_low <= d_high, the edge
    label is a progression exactly when d_high = k * d_low for an integer
    1 <= k <= |label of the d_low endpoint|. When both endpoints share one
    difference the bound is the smaller endpoint cardinality (k = 1 always
    passes). Requires every vertex label to have a deterministic index.
    """
    diffs = _vertex_differences(lg)
    violations = []
    for u, v in lg.graph.edges:
        du, dv = diffs[u], diffs[v]
        if du <= dv:
            low_vertices = [u] if du < dv else [u, v]
            low, high = du, dv
        else:
            low_vertices = [v]
            low, high = dv, du
        bound = min(len(lg.vertex_labels[x]) for x in low_vertices)
        if high % low != 0:
            violations.append(MultiplierViolation((u, v), low, high, None, bound))
            continue
        k = high // low
        if k > bound:
            violations.append(MultiplierViolation((u, v), low, high, k, bound))
    sub_minimal = tuple(
        v for v in sorted(lg.vertex_labels) if len(lg.vertex_labels[v]) < MIN_ARITHMETIC_LENGTH
    )
    return MultiplierReport(
        ok=not violations, violations=tuple(violations), sub_minimal_vertices=sub_minimal
    )


@dataclass(frozen=True)
class GcdReport:
    ok: bool
    vertex_gcd: int
    edge_gcd: int
    min_vertex_difference: int


def _gcd_report(lg: LabeledGraph, vertices, edges) -> GcdReport:
    vertex_diffs = []
    for v in vertices:
        ap = detect_ap(lg.vertex_labels[v])
        if ap is None or ap.difference is None:
            raise NotArithmeticError(f"vertex {v!r} has no deterministic index")
        vertex_diffs.append(ap.difference)
    edge_diffs = []
    for e in edges:
        ap = detect_ap(lg.edge_labels[e])
        if ap is None or ap.difference is None:
            raise NotArithmeticError(f"edge {e} has no deterministic index")
        edge_diffs.append(ap.difference)
    vg = math.gcd(*vertex_diffs)
    eg = math.gcd(*edge_diffs)
    mn = min(vertex_diffs)
    return GcdReport(ok=vg == eg == mn, vertex_gcd=vg, edge_gcd=eg, min_vertex_difference=mn)


def check_gcd_invariant(lg: LabeledGraph) -> GcdReport:
    """gcd of vertex differences == gcd of edge differences == least vertex difference.

    The propagation argument behind this walks edges, so the graph must be
    connected; use check_gcd_invariant_components for per-component reports.
    """
    if not lg.graph.is_connected():
        raise DisconnectedGraphError(
            "gcd invariant needs a connected graph; see check_gcd_invariant_components"
        )
    return _gcd_report(lg, lg.graph.vertices, lg.graph.edges)


def check_gcd_invariant_components(lg: LabeledGraph) -> dict:
    """Per-component gcd reports, keyed by each component's vertex tuple."""
    out = {}
    for comp in lg.graph.components():
        members = set(comp)
        edges = [e for e in lg.graph.edges if e[0] in members]
        out[comp] = _gcd_report(lg, comp, edges)
    return out


def check_singleton_endpoint_rule(lg: LabeledGraph) -> bool:
    """True iff every weak edge has a singleton endpoint.

    |A+B| >= |A| + |B| - 1, so an edge label can only collapse to the larger
    endpoint cardinality when the smaller one is 1; this checks that no
    labeling claims otherwise.
    """
    for (u, v), cls in classify_edges(lg).items():
        if cls.weak:
            if min(len(lg.vertex_labels[u]), len(lg.vertex_labels[v])) != 1:
                return False
    return True
