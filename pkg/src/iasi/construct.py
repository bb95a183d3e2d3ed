"""Constructive arithmetic labelings.

Every graph admits one: walk it breadth-first, give each newly visited
vertex a progression whose common difference is a bounded multiple of every
already-visited neighbor's difference, and spread first terms far enough
apart that no two vertex labels and no two edge labels can coincide.

First terms come from a greedy sequence with pairwise-distinct sums
(1, 2, 3, 5, 8, 13, ...) scaled by a stride wider than twice the largest
label span: distinct offsets separate vertex labels, distinct offset sums
separate edge labels, and the stride keeps whole labels disjoint.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .classify import verify_iasi
from .errors import LabelCollisionError, SubgraphError
from .graphs import Graph, LabeledGraph
from .sets import APSet

__all__ = [
    "ConstructionParams",
    "ConstructionResult",
    "construct_arbitrary",
    "construct_complete",
    "restrict_labeling",
    "distinct_sum_sequence",
]

_POLICIES = ("fixed", "random", "maximal")


def distinct_sum_sequence(count: int) -> list[int]:
    """First ``count`` terms of the greedy sequence with distinct pairwise sums.

    Greedy from 1; a candidate joins when every sum with an earlier term is
    new. Gives 1, 2, 3, 5, 8, 13, 21, ...
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    terms: list[int] = []
    sums = set()
    candidate = 1
    while len(terms) < count:
        new_sums = {candidate + t for t in terms}
        if len(new_sums) == len(terms) and not (new_sums & sums):
            sums |= new_sums
            terms.append(candidate)
        candidate += 1
    return terms


@dataclass(frozen=True)
class ConstructionParams:
    """Knobs for construct_arbitrary.

    multiplier_policy picks the per-edge difference ratio k relative to the
    visited neighbor: "fixed" pins k=1 (uniform differences), "random" draws
    uniformly from [1, bound], "maximal" takes the bound itself; the bound
    is the smallest label cardinality among same-difference visited
    neighbors. start_offsets / label_sizes, when given, are consumed in
    traversal order and must cover every vertex.
    """

    base_difference: int = 1
    label_size_range: tuple[int, int] = (3, 3)
    multiplier_policy: str = "fixed"
    seed: int = 0
    start_offsets: tuple | None = None
    label_sizes: tuple | None = None

    def __post_init__(self):
        if not isinstance(self.base_difference, int) or self.base_difference < 1:
            raise ValueError(f"base difference must be >= 1, got {self.base_difference!r}")
        lo, hi = self.label_size_range
        if lo < 3 or hi < lo:
            raise ValueError(f"label size range must satisfy 3 <= lo <= hi, got ({lo}, {hi})")
        if self.multiplier_policy not in _POLICIES:
            raise ValueError(
                f"unknown multiplier policy {self.multiplier_policy!r}; choose from {_POLICIES}"
            )
        if not isinstance(self.seed, int) or not 0 <= self.seed <= 2**64 - 1:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.label_sizes is not None:
            object.__setattr__(self, "label_sizes", tuple(self.label_sizes))
            if any(s < 3 for s in self.label_sizes):
                raise ValueError("explicit label sizes must all be >= 3")
        if self.start_offsets is not None:
            offsets = tuple(self.start_offsets)
            object.__setattr__(self, "start_offsets", offsets)
            if any(not isinstance(o, int) or o < 0 for o in offsets):
                raise ValueError("explicit offsets must be non-negative integers")
            if len(set(offsets)) != len(offsets):
                raise ValueError("explicit offsets must be pairwise distinct")


@dataclass(frozen=True)
class ConstructionResult:
    """A constructed labeling plus what happened on the way.

    fallback_applied means the multi-neighbor difference constraints could
    not all be met and the whole graph was relabeled with the uniform base
    difference (which always works); fallback_vertex names the trigger.
    """

    labeled_graph: LabeledGraph
    differences: dict
    sizes: dict
    offsets: dict
    fallback_applied: bool = False
    fallback_vertex: str | None = None
    diagnostics: dict = field(default_factory=dict)


def _traversal_order(graph: Graph) -> tuple[list, dict]:
    """BFS order from the smallest vertex of each component; parents recorded."""
    from collections import deque

    order = []
    seen = set()
    for root in graph.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        order.append(root)
        while queue:
            cur = queue.popleft()
            for nb in graph.neighbors(cur):
                if nb not in seen:
                    seen.add(nb)
                    order.append(nb)
                    queue.append(nb)
    return order, {v: i for i, v in enumerate(order)}


def _pick_multiplier(policy: str, rng: random.Random, bound: int) -> int:
    if policy == "fixed":
        return 1
    if policy == "maximal":
        return bound
    return rng.randint(1, bound)


def construct_arbitrary(graph: Graph, params: ConstructionParams) -> ConstructionResult:
    """Label any graph arithmetically, component by component.

    Differences: the first vertex of a component gets the base difference;
    a later vertex looks at its already-visited neighbors. If they share a
    single difference d, the new difference is k*d with k from the policy,
    bounded by the smallest of their label cardinalities. If they carry
    several differences, the largest is taken when it is a bounded multiple
    of each of them; otherwise the whole graph falls back to the uniform
    base difference, which satisfies every edge with k=1.

    With automatic offsets the result is always an arithmetic set-indexer.
    Explicit offsets are honored verbatim and can collide; a collision
    raises LabelCollisionError instead of returning a broken labeling.
    """
    order, position = _traversal_order(graph)
    rng = random.Random(params.seed)

    if params.label_sizes is not None:
        if len(params.label_sizes) != len(order):
            raise ValueError(
                f"expected {len(order)} label sizes, got {len(params.label_sizes)}"
            )
        sizes = {v: params.label_sizes[i] for i, v in enumerate(order)}
    else:
        lo, hi = params.label_size_range
        sizes = {v: (lo if lo == hi else rng.randint(lo, hi)) for v in order}

    differences: dict = {}
    fallback_vertex = None
    for v in order:
        visited = [u for u in graph.neighbors(v) if u in differences]
        if not visited:
            differences[v] = params.base_difference
            continue
        diffs = {differences[u] for u in visited}
        if len(diffs) == 1:
            d = diffs.pop()
            bound = min(sizes[u] for u in visited)
            differences[v] = _pick_multiplier(params.multiplier_policy, rng, bound) * d
        else:
            top = max(diffs)
            feasible = all(
                top % differences[u] == 0 and top // differences[u] <= sizes[u]
                for u in visited
            )
            if feasible:
                differences[v] = top
            else:
                fallback_vertex = v
                break
    if fallback_vertex is not None:
        differences = {v: params.base_difference for v in order}

    if params.start_offsets is not None:
        if len(params.start_offsets) != len(order):
            raise ValueError(
                f"expected {len(order)} offsets, got {len(params.start_offsets)}"
            )
        offsets = {v: params.start_offsets[i] for i, v in enumerate(order)}
    else:
        max_span = max((sizes[v] - 1) * differences[v] for v in order)
        stride = 2 * max_span + 1
        firsts = distinct_sum_sequence(len(order))
        offsets = {v: firsts[i] * stride for i, v in enumerate(order)}

    labels = {
        v: APSet(offsets[v], differences[v], sizes[v]).expand() for v in order
    }
    lg = LabeledGraph(graph, labels)

    if params.start_offsets is not None:
        report = verify_iasi(lg)
        if not report.is_iasi:
            raise LabelCollisionError(report.collision)

    return ConstructionResult(
        labeled_graph=lg,
        differences=differences,
        sizes=sizes,
        offsets=offsets,
        fallback_applied=fallback_vertex is not None,
        fallback_vertex=fallback_vertex,
        diagnostics={"traversal": tuple(order)},
    )


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def construct_complete(
    n: int, part_sizes: tuple[int, int], d: int, k: int, sizes=3
) -> LabeledGraph:
    """Arithmetic labeling of the complete graph on n vertices in two bands.

    The first ``r`` vertices (part one) get common difference d, the rest
    get k*d. The multiplier k must not exceed the smallest part-one label
    cardinality: every cross edge pairs a d-label with a k*d-label, and k
    beyond that cardinality would break the progression.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"need at least two vertices, got {n!r}")
    if n > len(_LETTERS):
        raise ValueError(f"at most {len(_LETTERS)} vertices supported, got {n}")
    r, l = part_sizes
    if r < 1 or l < 0 or r + l != n:
        raise ValueError(f"part sizes {part_sizes} do not split {n} with nonempty part one")
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"difference must be >= 1, got {d!r}")
    if isinstance(sizes, int):
        sizes = (sizes,) * n
    else:
        sizes = tuple(sizes)
        if len(sizes) != n:
            raise ValueError(f"expected {n} label sizes, got {len(sizes)}")
    if any(s < 3 for s in sizes):
        raise ValueError("label sizes must all be >= 3")
    part_one_min = min(sizes[:r])
    if not isinstance(k, int) or not 1 <= k <= part_one_min:
        raise ValueError(
            f"multiplier k={k!r} outside [1, {part_one_min}] (smallest part-one label size)"
        )

    vertices = list(_LETTERS[:n])
    edges = [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1 :]]
    graph = Graph(vertices, edges)

    differences = {v: (d if i < r else k * d) for i, v in enumerate(vertices)}
    max_span = max((sizes[i] - 1) * differences[v] for i, v in enumerate(vertices))
    stride = 2 * max_span + 1
    firsts = distinct_sum_sequence(n)
    labels = {
        v: APSet(firsts[i] * stride, differences[v], sizes[i]).expand()
        for i, v in enumerate(vertices)
    }
    return LabeledGraph(graph, labels)


def restrict_labeling(lg: LabeledGraph, h: Graph) -> LabeledGraph:
    """Restrict a labeling to a subgraph; arithmetic-ness survives restriction."""
    parent_vertices = set(lg.graph.vertices)
    parent_edges = set(lg.graph.edges)
    for v in h.vertices:
        if v not in parent_vertices:
            raise SubgraphError(f"vertex {v!r} is not in the labeled graph")
    for e in h.edges:
        if e not in parent_edges:
            raise SubgraphError(f"edge {e} is not in the labeled graph")
    return LabeledGraph(h, {v: lg.vertex_labels[v] for v in h.vertices})
