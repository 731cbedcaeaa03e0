"""Command-line interface.

Input posets come from a file path, stdin (``-``), or the built-in
figure catalog (``--figure``).  Machine-readable output is JSON with
sorted keys and decimal integers only, so identical inputs produce
byte-identical reports.

Exit codes: 0 success, 1 parse/usage errors raised by this tool,
2 consistency failure (a library bug signal), 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .birkhoff import h_vector, order_polynomial_value
from .canonical import classify, minimal_generators
from .documents import PosetDocument, parse_document
from .dot import export_dot
from .errors import BudgetExceeded, ConsistencyFailure, HibiringError, ParseError
from .figures import figure_catalog
from .generalized import compare_types, multichain_poset, verify_product_formulas
from .posets import Poset, enumerate_canonical_chain_decompositions
from .search import SEARCH_TARGETS, run_search

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONSISTENT = 2
EXIT_BUDGET = 3


def _load_document(args) -> PosetDocument:
    if getattr(args, "figure", None):
        catalog = figure_catalog()
        if args.figure not in catalog:
            raise ParseError(f"unknown figure {args.figure!r}; see 'figures list'")
        return catalog[args.figure]
    if args.input is None:
        raise ParseError("no input: give a file path, '-' for stdin, or --figure NAME")
    if args.input == "-":
        return parse_document(sys.stdin.read(), "<stdin>")
    path = Path(args.input)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return parse_document(text, str(path))


def _load_poset(args) -> tuple[str, Poset]:
    doc = _load_document(args)
    try:
        return doc.name, doc.to_poset()
    except HibiringError as exc:
        raise ParseError(f"{doc.name or '<document>'}: {exc}") from exc


def _print_report(report, fmt: str) -> None:
    data = report.to_dict()
    if fmt == "json":
        print(json.dumps(data, sort_keys=True, indent=2))
        return
    order = [
        "name",
        "size",
        "rank",
        "rank_extended",
        "is_gorenstein",
        "is_pseudo_gorenstein",
        "is_level",
        "is_miyazaki",
        "is_regular",
        "is_hyper_planar",
        "is_simple",
        "is_pure",
        "is_butterfly",
        "cover_inequalities",
        "cm_type",
        "gamma",
        "h_vector",
        "canonical_decomposition_count",
        "decomposition_lengths",
        "oracle_mode",
        "budget_exceeded",
    ]
    for key in order:
        print(f"{key}: {data[key]}")
    bad = [f for f in report.consistency_flags if not f.ok]
    print(f"consistency: {'ok' if not bad else 'FAILED'} ({len(report.consistency_flags)} checks)")
    for f in bad:
        print(f"  FAILED {f.name}: {f.detail}")


def cmd_classify(args) -> int:
    name, poset = _load_poset(args)
    report = classify(poset, name=name, budget=args.budget, oracle_threshold=args.oracle_threshold)
    _print_report(report, args.format)
    if not report.ok:
        return EXIT_INCONSISTENT
    if report.budget_exceeded:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_figures(args) -> int:
    catalog = figure_catalog()
    if args.action == "list":
        for name in sorted(catalog):
            print(name)
        return EXIT_OK
    if not args.name:
        raise ParseError("'figures show' needs a fixture name; see 'figures list'")
    if args.name not in catalog:
        raise ParseError(f"unknown figure {args.name!r}")
    sys.stdout.write(catalog[args.name].to_json())
    return EXIT_OK


def cmd_export_dot(args) -> int:
    _, poset = _load_poset(args)
    dec = None
    if args.decomposition is not None:
        decs = enumerate_canonical_chain_decompositions(poset)
        if not (0 <= args.decomposition < len(decs)):
            raise ParseError(
                f"decomposition index {args.decomposition} out of range; poset has {len(decs)}"
            )
        dec = decs[args.decomposition]
    sys.stdout.write(export_dot(poset, dec))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    name, poset = _load_poset(args)
    hv = h_vector(poset)
    values = {i: order_polynomial_value(poset, i) for i in range(args.degrees + 1)}
    if args.format == "json":
        print(
            json.dumps(
                {
                    "name": name,
                    "h_vector": list(hv.coefficients),
                    "dimension": hv.dimension,
                    "hilbert_function": values,
                },
                sort_keys=True,
                indent=2,
            )
        )
    else:
        print(f"name: {name}")
        print(f"h_vector: {list(hv.coefficients)}")
        print(f"dimension: {hv.dimension}")
        for i, v in values.items():
            print(f"H({i}) = {v}")
    return EXIT_OK


def cmd_canonical(args) -> int:
    name, poset = _load_poset(args)
    gens = minimal_generators(poset, budget=args.budget)
    if args.format == "json":
        data = {
            "name": name,
            "cm_type": gens.cm_type,
            "gamma": gens.gamma,
            "min_degree": gens.min_degree,
            "degree_histogram": {str(d): c for d, c in gens.degree_histogram},
        }
        if args.show_generators:
            data["generators"] = [
                {"degree": g.degree, "values": g.as_dict(poset)} for g in gens.generators
            ]
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(f"name: {name}")
        print(f"cm_type: {gens.cm_type}")
        print(f"gamma: {gens.gamma}")
        print(f"min_degree: {gens.min_degree}")
        print(f"degree_histogram: {dict(gens.degree_histogram)}")
        if args.show_generators:
            for g in gens.generators:
                print(f"  degree {g.degree}: {g.as_dict(poset)}")
    return EXIT_OK


def cmd_product(args) -> int:
    name, poset = _load_poset(args)
    formulas = verify_product_formulas(poset, args.r)
    t1, t2 = compare_types(poset, args.r, budget=args.budget)
    mp = multichain_poset(poset, args.r)
    data = {
        "name": name,
        "r": args.r,
        "product_size": len(mp.product),
        "formulas_pass": formulas.passed,
        "type": t1,
        "type_r": t2,
    }
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        for k, v in data.items():
            print(f"{k}: {v}")
    return EXIT_OK if formulas.passed else EXIT_INCONSISTENT


def cmd_search(args) -> int:
    result = run_search(
        args.target,
        seed=args.seed,
        count=args.count,
        max_size=args.max_size,
        edge_probability=args.edge_probability,
        budget=args.budget,
    )
    print(result.summary())
    return EXIT_OK


def _add_input_args(sub) -> None:
    sub.add_argument("input", nargs="?", help="poset document path, or '-' for stdin")
    sub.add_argument("--figure", help="use a catalog fixture as input")


def _add_common(sub) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--budget", type=int, default=5_000_000)
    sub.add_argument("--oracle-threshold", type=int, default=10, dest="oracle_threshold")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hibiring",
        description="Classify finite posets and their ideal lattices: Gorenstein, pseudo-Gorenstein, level.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("classify", help="full classification report")
    _add_input_args(sub)
    _add_common(sub)
    sub.set_defaults(func=cmd_classify)

    sub = subs.add_parser("figures", help="list or show catalog fixtures")
    sub.add_argument("action", choices=("list", "show"))
    sub.add_argument("name", nargs="?")
    sub.set_defaults(func=cmd_figures)

    sub = subs.add_parser("export-dot", help="Hasse diagram as DOT")
    _add_input_args(sub)
    sub.add_argument(
        "--decomposition",
        type=int,
        default=None,
        help="color chains of the i-th canonical decomposition; diagonals dashed",
    )
    sub.set_defaults(func=cmd_export_dot)

    sub = subs.add_parser("hilbert", help="h-vector and Hilbert function values")
    _add_input_args(sub)
    _add_common(sub)
    sub.add_argument("--degrees", type=int, default=5, help="print H(0..k)")
    sub.set_defaults(func=cmd_hilbert)

    sub = subs.add_parser("canonical", help="minimal generators of the canonical ideal")
    _add_input_args(sub)
    _add_common(sub)
    sub.add_argument("--show-generators", action="store_true")
    sub.set_defaults(func=cmd_canonical)

    sub = subs.add_parser("product", help="multichain product comparisons")
    _add_input_args(sub)
    _add_common(sub)
    sub.add_argument("--r", type=int, default=3)
    sub.set_defaults(func=cmd_product)

    sub = subs.add_parser("search", help="counterexample search harness")
    sub.add_argument("target", choices=SEARCH_TARGETS)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--count", type=int, default=100)
    sub.add_argument("--max-size", type=int, default=6, dest="max_size")
    sub.add_argument("--edge-probability", type=float, default=0.3, dest="edge_probability")
    sub.add_argument("--budget", type=int, default=5_000_000)
    sub.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ConsistencyFailure as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except HibiringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
