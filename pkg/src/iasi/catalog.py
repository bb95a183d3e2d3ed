"""Exhaustive small-graph catalog and the theorem-checking harness.

Connected labeled simple graphs are enumerated by adjacency bitmask (no
isomorphism reduction), so the stream is exactly the 1, 4, 38, 728, ...
connected graphs on 2, 3, 4, 5, ... named vertices a, b, c, ... Each graph
is constructed, verified, classified, and pushed through the transforms;
every check emits one CheckRecord suitable for JSONL persistence.

Outcomes: "pass" means the artifact behaved per contract (structured
collision errors included -- the existence claims say some labeling works,
not that this transfer does); "discrepancy" means an empirical
contradiction of a claimed result and is worth eyeballs; "fail" means a
defect. The K3 probe labels a triangle with three distinct differences
(d, 2d, 4d, all sizes 4); the verifier accepts it as arithmetic, which the
two-band construction's necessity claim says should not happen, so that
record lands as a discrepancy.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .classify import (
    check_gcd_invariant,
    check_multiplier_condition,
    classify_arithmetic,
)
from .construct import ConstructionParams, construct_arbitrary, distinct_sum_sequence
from .errors import GraphValidationError, LabelCollisionError
from .graphs import Graph, LabeledGraph
from .sets import APSet, detect_ap
from .transforms import (
    contract_edge,
    reduce_topologically,
    subdivide,
    to_line_graph,
    to_total_graph,
)

__all__ = [
    "MAX_CATALOG_N",
    "enumerate_connected_graphs",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "CheckRecord",
    "records_jsonl",
    "write_records_jsonl",
    "probe_k3_three_index",
    "run_catalog_checks",
]

_LETTERS = "abcdefghijklmnopqrstuvwxyz"
MIN_CATALOG_N = 2
MAX_CATALOG_N = 7


def _connected(n: int, edges) -> bool:
    adj = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        cur = stack.pop()
        for nb in adj[cur]:
            if not seen[nb]:
                seen[nb] = True
                count += 1
                stack.append(nb)
    return count == n


def enumerate_connected_graphs(max_n: int) -> Iterator[Graph]:
    """Every connected labeled graph on 2..max_n vertices, smallest first.

    Within one vertex count the order is by edge bitmask over the
    lexicographic vertex pairs, so the stream is stable across runs.
    """
    if not isinstance(max_n, int) or not MIN_CATALOG_N <= max_n <= MAX_CATALOG_N:
        raise ValueError(f"max_n must be in [{MIN_CATALOG_N}, {MAX_CATALOG_N}], got {max_n!r}")
    for n in range(MIN_CATALOG_N, max_n + 1):
        vertices = list(_LETTERS[:n])
        pairs = list(combinations(range(n), 2))
        for mask in range(1, 1 << len(pairs)):
            chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if not _connected(n, chosen):
                continue
            yield Graph(vertices, [(vertices[i], vertices[j]) for i, j in chosen])


def path_graph(n: int) -> Graph:
    if n < 2 or n > len(_LETTERS):
        raise ValueError(f"path needs 2..{len(_LETTERS)} vertices, got {n}")
    v = _LETTERS[:n]
    return Graph(list(v), [(v[i], v[i + 1]) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3 or n > len(_LETTERS):
        raise ValueError(f"cycle needs 3..{len(_LETTERS)} vertices, got {n}")
    v = _LETTERS[:n]
    return Graph(list(v), [(v[i], v[(i + 1) % n]) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 2 or n > len(_LETTERS):
        raise ValueError(f"complete graph needs 2..{len(_LETTERS)} vertices, got {n}")
    v = _LETTERS[:n]
    return Graph(list(v), list(combinations(v, 2)))


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: vertex a joined to each of the other n-1."""
    if n < 2 or n > len(_LETTERS):
        raise ValueError(f"star needs 2..{len(_LETTERS)} vertices, got {n}")
    v = _LETTERS[:n]
    return Graph(list(v), [(v[0], leaf) for leaf in v[1:]])


@dataclass(frozen=True)
class CheckRecord:
    """One outcome of one check on one graph.

    wall_time_ms stays off the JSONL line: persisted records must be
    byte-identical across identically-seeded runs, and timing is not.
    """

    graph_id: str
    check: str
    outcome: str  # pass | fail | discrepancy
    witness: dict = field(default_factory=dict)
    wall_time_ms: float = 0.0

    def json_line(self) -> str:
        payload = {
            "graph": self.graph_id,
            "check": self.check,
            "outcome": self.outcome,
            "witness": self.witness,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def records_jsonl(records) -> str:
    return "".join(r.json_line() + "\n" for r in records)


def write_records_jsonl(records, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(records_jsonl(records))


def _collision_witness(exc: LabelCollisionError) -> dict:
    c = exc.witness
    return {
        "collision": {
            "kind": c.kind,
            "first": c.first,
            "second": c.second,
            "label": list(c.label),
        }
    }


def probe_k3_three_index(d: int = 1) -> CheckRecord:
    """Label K3 with differences d, 2d, 4d (sizes 4) and see what the verifier says.

    Every pairwise multiplier is within bounds (2, 2 and 4 against size-4
    labels), so the labeling classifies arithmetic with three distinct
    vertex differences; the two-band necessity claim for complete graphs
    allows at most two. Finding it arithmetic is therefore recorded as a
    discrepancy, not a failure.
    """
    graph = complete_graph(3)
    differences = {"a": d, "b": 2 * d, "c": 4 * d}
    stride = 2 * (3 * 4 * d) + 1
    firsts = distinct_sum_sequence(3)
    labels = {
        v: APSet(firsts[i] * stride, differences[v], 4).expand()
        for i, v in enumerate(graph.vertices)
    }
    start = time.perf_counter()
    report = classify_arithmetic(LabeledGraph(graph, labels))
    elapsed = (time.perf_counter() - start) * 1000
    distinct = sorted(set(differences.values()))
    if report.is_iasi and report.arithmetic and len(distinct) == 3:
        return CheckRecord(
            graph_id=graph.graph_id(),
            check="probe-k3-three-index",
            outcome="discrepancy",
            witness={
                "differences": distinct,
                "arithmetic": True,
                "note": "three distinct differences on K3 verified arithmetic",
            },
            wall_time_ms=elapsed,
        )
    return CheckRecord(
        graph_id=graph.graph_id(),
        check="probe-k3-three-index",
        outcome="pass",
        witness={"arithmetic": report.arithmetic, "is_iasi": report.is_iasi},
        wall_time_ms=elapsed,
    )


def _first_reducible_vertex(graph: Graph):
    for v in graph.vertices:
        if graph.degree(v) == 2:
            u, w = graph.neighbors(v)
            if not graph.has_edge(u, w):
                return v
    return None


def _transform_record(gid: str, check: str, fn) -> CheckRecord:
    """Run one transform; arithmetic output passes, collisions pass with a
    witness, a rejected structure passes with the violation, and a
    non-arithmetic output contradicts the transfer claims (discrepancy)."""
    start = time.perf_counter()
    try:
        out = fn()
    except LabelCollisionError as exc:
        return CheckRecord(
            gid, check, "pass", _collision_witness(exc),
            (time.perf_counter() - start) * 1000,
        )
    except GraphValidationError as exc:
        return CheckRecord(
            gid, check, "pass",
            {"rejected": [v.kind for v in exc.violations]},
            (time.perf_counter() - start) * 1000,
        )
    report = classify_arithmetic(out)
    elapsed = (time.perf_counter() - start) * 1000
    if report.is_iasi and report.arithmetic:
        return CheckRecord(gid, check, "pass", {"arithmetic": True}, elapsed)
    non_ap_edges = sorted(
        f"{u}-{v}" for (u, v), label in out.edge_labels.items() if detect_ap(label) is None
    )
    return CheckRecord(
        gid, check, "discrepancy",
        {
            "arithmetic": report.arithmetic,
            "is_iasi": report.is_iasi,
            "non_ap_edges": non_ap_edges,
        },
        elapsed,
    )


def _timed(gid: str, check: str, ok: bool, witness: dict) -> CheckRecord:
    return CheckRecord(gid, check, "pass" if ok else "fail", witness)


def check_one_graph(graph: Graph, policy: str, seed: int, include_transforms: bool = True):
    """All records for one catalog graph under one construction policy."""
    gid = graph.graph_id()
    records = []
    start = time.perf_counter()
    result = construct_arbitrary(
        graph,
        ConstructionParams(
            base_difference=1,
            label_size_range=(3, 3),
            multiplier_policy=policy,
            seed=seed,
        ),
    )
    lg = result.labeled_graph
    records.append(
        CheckRecord(
            gid, f"construct/{policy}", "pass",
            {"fallback": result.fallback_applied},
            (time.perf_counter() - start) * 1000,
        )
    )
    report = classify_arithmetic(lg)
    records.append(
        _timed(gid, f"verify/{policy}", report.is_iasi, {"is_iasi": report.is_iasi})
    )
    records.append(
        _timed(gid, f"arithmetic/{policy}", report.arithmetic, {"arithmetic": report.arithmetic})
    )
    multiplier = check_multiplier_condition(lg)
    records.append(
        _timed(
            gid, f"multiplier/{policy}", multiplier.ok,
            {"violations": [str(v) for v in multiplier.violations]},
        )
    )
    gcd_report = check_gcd_invariant(lg)
    records.append(
        _timed(
            gid, f"gcd/{policy}", gcd_report.ok,
            {
                "vertex_gcd": gcd_report.vertex_gcd,
                "edge_gcd": gcd_report.edge_gcd,
                "min_vertex_difference": gcd_report.min_vertex_difference,
            },
        )
    )

    if include_transforms:
        first_edge = graph.edges[0]
        records.append(
            _transform_record(
                gid, f"transform-contract/{policy}", lambda: contract_edge(lg, first_edge)
            )
        )
        records.append(
            _transform_record(
                gid, f"transform-subdivide/{policy}", lambda: subdivide(lg, first_edge)
            )
        )
        reducible = _first_reducible_vertex(graph)
        if reducible is not None:
            records.append(
                _transform_record(
                    gid,
                    f"transform-reduce/{policy}",
                    lambda: reduce_topologically(lg, reducible),
                )
            )
        if len(graph.edges) >= 2:
            records.append(
                _transform_record(gid, f"transform-line/{policy}", lambda: to_line_graph(lg))
            )
        records.append(
            _transform_record(gid, f"transform-total/{policy}", lambda: to_total_graph(lg))
        )
    return records


def run_catalog_checks(
    max_n: int,
    policies=("fixed",),
    seed: int = 0,
    include_transforms: bool = True,
    probe: bool = True,
):
    """Check the whole catalog; returns (records, summary).

    The record stream is deterministic for a given (max_n, policies, seed):
    graphs in enumeration order, checks in a fixed sequence, the K3 probe
    last. The summary counts outcomes and carries the only timing data.
    """
    started = time.perf_counter()
    records = []
    graphs = 0
    for graph in enumerate_connected_graphs(max_n):
        graphs += 1
        for policy in policies:
            records.extend(check_one_graph(graph, policy, seed, include_transforms))
    if probe and max_n >= 3:
        records.append(probe_k3_three_index())
    counts = {"pass": 0, "fail": 0, "discrepancy": 0}
    for r in records:
        counts[r.outcome] += 1
    summary = {
        "max_n": max_n,
        "policies": list(policies),
        "seed": seed,
        "graphs": graphs,
        "records": len(records),
        "outcomes": counts,
        "elapsed_s": round(time.perf_counter() - started, 3),
    }
    return records, summary
