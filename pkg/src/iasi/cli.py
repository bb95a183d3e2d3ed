"""Command-line interface.

Each subcommand prints one JSON object on stdout; diagnostics go to stderr.
Exit codes: 0 all checks passed, 1 a check failed or a discrepancy was
found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .catalog import run_catalog_checks, write_records_jsonl
from .classify import classify_arithmetic, verify_iasi
from .construct import ConstructionParams, construct_arbitrary
from .errors import IasiError, LabelCollisionError, NotArithmeticError
from .io import export_dot, load_document, load_graph, save_document
from .transforms import (
    contract_edge,
    reduce_topologically,
    subdivide,
    to_line_graph,
    to_total_graph,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit(payload: dict):
    print(json.dumps(payload, sort_keys=True))


def _collision_dict(collision):
    if collision is None:
        return None
    return {
        "kind": collision.kind,
        "first": collision.first,
        "second": collision.second,
        "label": list(collision.label),
    }


def _parse_sizes(text: str) -> tuple[int, int]:
    parts = text.split(",")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be integers, got {text!r}")
    if len(values) == 1:
        return (values[0], values[0])
    if len(values) == 2:
        return (values[0], values[1])
    raise argparse.ArgumentTypeError("expected one size or a lo,hi pair")


def _parse_edge(text: str) -> tuple[str, str]:
    parts = text.split(",")
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError(f"expected an edge as u,v, got {text!r}")
    return (parts[0], parts[1])


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iasi",
        description="Arithmetic integer additive set-indexers: construct, verify, classify, transform.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="label a graph arithmetically")
    p.add_argument("--input", required=True, help="graph document (labels ignored)")
    p.add_argument("--d0", type=int, default=1, help="base common difference")
    p.add_argument("--sizes", type=_parse_sizes, default=(3, 3), help="label size or lo,hi range")
    p.add_argument("--policy", choices=("fixed", "random", "maximal"), default="fixed")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True, help="labeled document to write")

    p = sub.add_parser("verify", help="check vertex and edge label injectivity")
    p.add_argument("--input", required=True)

    p = sub.add_parser("classify", help="full classification report")
    p.add_argument("--input", required=True)
    p.add_argument(
        "--strict-semi",
        action="store_true",
        help="semi-arithmetic only when no edge label is a progression",
    )

    p = sub.add_parser("transform", help="apply a label-preserving transform")
    p.add_argument("--op", required=True, choices=("contract", "reduce", "subdivide", "line", "total"))
    p.add_argument("--edge", type=_parse_edge, help="edge as u,v (contract/subdivide)")
    p.add_argument("--vertex", help="vertex to reduce away (reduce)")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)

    p = sub.add_parser("catalog", help="run the exhaustive small-graph checks")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument(
        "--policy",
        action="append",
        choices=("fixed", "random", "maximal"),
        help="construction policy; repeat for several (default: fixed)",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--records", help="JSONL file for per-check records")
    p.add_argument(
        "--allow-large",
        action="store_true",
        help="required for --max-n 7 (1.87M graphs)",
    )

    p = sub.add_parser("export-dot", help="write Graphviz DOT with label attributes")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    return parser


def _cmd_construct(args) -> int:
    graph = load_graph(args.input)
    params = ConstructionParams(
        base_difference=args.d0,
        label_size_range=args.sizes,
        multiplier_policy=args.policy,
        seed=args.seed,
    )
    result = construct_arbitrary(graph, params)
    report = classify_arithmetic(result.labeled_graph)
    metadata = {
        "tool_version": __version__,
        "seed": args.seed,
        "params": {
            "d0": args.d0,
            "sizes": list(args.sizes),
            "policy": args.policy,
        },
    }
    save_document(result.labeled_graph, args.output, metadata)
    _emit(
        {
            "command": "construct",
            "output": args.output,
            "is_iasi": report.is_iasi,
            "arithmetic": report.arithmetic,
            "fallback": result.fallback_applied,
        }
    )
    return EXIT_PASS if report.is_iasi and report.arithmetic else EXIT_FAIL


def _cmd_verify(args) -> int:
    lg = load_document(args.input)
    report = verify_iasi(lg)
    _emit(
        {
            "command": "verify",
            "is_iasi": report.is_iasi,
            "collision": _collision_dict(report.collision),
        }
    )
    return EXIT_PASS if report.is_iasi else EXIT_FAIL


def _cmd_classify(args) -> int:
    lg = load_document(args.input)
    report = classify_arithmetic(lg, strict_semi=args.strict_semi)
    _emit(
        {
            "command": "classify",
            "is_iasi": report.is_iasi,
            "collision": _collision_dict(report.collision),
            "uniform_k": report.uniform_k,
            "vertex_uniform_l": report.vertex_uniform_l,
            "vertex_arithmetic": report.vertex_arithmetic,
            "edge_arithmetic": report.edge_arithmetic,
            "arithmetic": report.arithmetic,
            "semi_arithmetic": report.semi_arithmetic,
            "sub_minimal_vertices": list(report.sub_minimal_vertices),
            "per_edge": {
                f"{u}-{v}": {
                    "weak": cls.weak,
                    "strong": cls.strong,
                    "indexing_number": cls.indexing_number,
                }
                for (u, v), cls in sorted(report.per_edge.items())
            },
        }
    )
    return EXIT_PASS if report.is_iasi else EXIT_FAIL


def _cmd_transform(args) -> int:
    lg = load_document(args.input)
    needs_edge = args.op in ("contract", "subdivide")
    if needs_edge and args.edge is None:
        print(f"error: --op {args.op} requires --edge u,v", file=sys.stderr)
        return EXIT_USAGE
    if args.op == "reduce" and args.vertex is None:
        print("error: --op reduce requires --vertex", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.op == "contract":
            out = contract_edge(lg, args.edge)
        elif args.op == "subdivide":
            out = subdivide(lg, args.edge)
        elif args.op == "reduce":
            out = reduce_topologically(lg, args.vertex)
        elif args.op == "line":
            out = to_line_graph(lg)
        else:
            out = to_total_graph(lg)
    except LabelCollisionError as exc:
        _emit(
            {
                "command": "transform",
                "op": args.op,
                "error": "collision",
                "collision": _collision_dict(exc.witness),
            }
        )
        return EXIT_FAIL
    except (NotArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    save_document(out, args.output, {"tool_version": __version__, "transform": args.op})
    _emit({"command": "transform", "op": args.op, "output": args.output})
    return EXIT_PASS


def _cmd_catalog(args) -> int:
    if args.max_n >= 7 and not args.allow_large:
        print("error: --max-n 7 enumerates 1.87M graphs; pass --allow-large", file=sys.stderr)
        return EXIT_USAGE
    policies = tuple(args.policy) if args.policy else ("fixed",)
    records, summary = run_catalog_checks(args.max_n, policies=policies, seed=args.seed)
    if args.records:
        write_records_jsonl(records, args.records)
        summary["records_file"] = args.records
    _emit({"command": "catalog", **summary})
    bad = summary["outcomes"]["fail"] + summary["outcomes"]["discrepancy"]
    return EXIT_FAIL if bad else EXIT_PASS


def _cmd_export_dot(args) -> int:
    lg = load_document(args.input)
    export_dot(lg, args.output)
    _emit({"command": "export-dot", "output": args.output})
    return EXIT_PASS


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "classify": _cmd_classify,
    "transform": _cmd_transform,
    "catalog": _cmd_catalog,
    "export-dot": _cmd_export_dot,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IasiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
