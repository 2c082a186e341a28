"""Command-line interface.

Exit status: 0 success, 1 unmet precondition or hypothesis, 2 unreadable
input or bad arguments, 3 internal contradiction (a reproducer is dumped).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from . import constructive as con
from .audit import audit_bounds, parse_bounds
from .errors import FormatError, InternalContradiction, InvalidSpec, PreconditionError
from .exact.solver import chromatic_value, decide_k
from .families import FamilySpec, generate, parse_family
from .graph import Graph
from .io import emit_dimacs, emit_graph6, emit_json, load_graph, parse_graph6
from .search import search_conjecture, search_graphs
from .structure import ab_certificate, h_edge_certificate, total_domination_number
from .verify import Variant, verify

EXIT_OK, EXIT_PRECONDITION, EXIT_FORMAT, EXIT_CONTRADICTION = 0, 1, 2, 3


@dataclass
class _Theorem:
    needs_graph: bool
    run: Callable[[Graph | None, argparse.Namespace, tuple[int, ...]], object]


def _need_n(args: argparse.Namespace) -> int:
    if args.n is None:
        raise InvalidSpec("this theorem needs --n")
    return args.n


def _exact(g: Graph, variant: Variant):
    return chromatic_value(g, variant).witness


def _ab(g, args, params):
    if len(params) != 2:
        raise InvalidSpec("use --theorem ab:A,B")
    cert = ab_certificate(g, *params)
    if not cert:
        raise PreconditionError(f"graph is not ({params[0]},{params[1]})-degenerate; residual {sorted(cert.residual)}")
    return con.color_ab(g, cert)


def _hedge(g, args, params):
    if len(params) != 1:
        raise InvalidSpec("use --theorem hedge:H")
    cert = h_edge_certificate(g, params[0])
    if not cert:
        raise PreconditionError(f"graph is not {params[0]}-edge degenerate; residual {sorted(cert.residual)}")
    return con.color_ab(g, cert)


def _domination(g, args, params):
    _, D = total_domination_number(g)
    return con.color_via_total_domination(g, D, _exact(g, Variant.PROPER))


THEOREMS: dict[str, _Theorem] = {
    "tree": _Theorem(True, lambda g, a, p: con.color_tree(g)),
    "cycle": _Theorem(False, lambda g, a, p: con.color_cycle(_need_n(a))),
    "hypercube": _Theorem(False, lambda g, a, p: con.color_hypercube(_need_n(a))),
    "skn": _Theorem(False, lambda g, a, p: con.color_skn(_need_n(a))),
    "corona": _Theorem(True, lambda g, a, p: con.color_corona(g, _exact(g, Variant.PROPER))),
    "domination": _Theorem(True, _domination),
    "product": _Theorem(
        True, lambda g, a, p: con.product_coloring(g, _exact(g, Variant.CF), _exact(g, Variant.PROPER))
    ),
    "thread66": _Theorem(True, lambda g, a, p: con.color_thread66(g)),
    "ab": _Theorem(True, _ab),
    "hedge": _Theorem(True, _hedge),
    "clawfree": _Theorem(True, lambda g, a, p: con.color_clawfree(g)),
    "chordal": _Theorem(True, lambda g, a, p: con.color_chordal(g)),
    "mad83": _Theorem(True, lambda g, a, p: con.color_sparse(g, "mad83")),
    "mad52": _Theorem(True, lambda g, a, p: con.color_sparse(g, "mad52")),
    "mad2411": _Theorem(True, lambda g, a, p: con.color_sparse(g, "mad2411")),
    "outerplanar6": _Theorem(True, lambda g, a, p: con.color_outerplanar6(g)),
    "planar": _Theorem(True, lambda g, a, p: con.color_planar(g)),
    "fpendant": _Theorem(True, lambda g, a, p: con.color_f_pendant(g)),
}


def _parse_theorem(text: str) -> tuple[str, tuple[int, ...]]:
    name, _, rest = text.partition(":")
    name = name.lower().replace("-", "").replace("_", "")
    if name not in THEOREMS:
        raise InvalidSpec(f"unknown theorem {text!r}; choose from {', '.join(THEOREMS)}")
    try:
        params = tuple(int(x) for x in rest.split(",")) if rest else ()
    except ValueError:
        raise InvalidSpec(f"bad theorem parameters in {text!r}") from None
    return name, params


def _family(args: argparse.Namespace) -> FamilySpec:
    spec = parse_family(args.family)
    if spec.kind == "tree" and len(spec.args) == 1 and args.seed is not None:
        spec = FamilySpec("tree", (spec.args[0], args.seed))
    return spec


def _graphs(args: argparse.Namespace, required: bool = True) -> list[Graph]:
    if args.family and args.input:
        raise InvalidSpec("give either --family or --input, not both")
    if args.family:
        return [generate(_family(args))]
    if args.input:
        graphs = load_graph(args.input)
        if not graphs:
            raise FormatError(f"no graphs in {args.input}", 0)
        return graphs
    if required:
        raise InvalidSpec("an input graph is required (--family or --input)")
    return []


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _one_or_many(items: list) -> object:
    return items[0] if len(items) == 1 else items


def cmd_solve(args: argparse.Namespace) -> int:
    variant = Variant.parse(args.variant)
    out = []
    for g in _graphs(args):
        if args.k is not None:
            c = decide_k(g, variant, args.k)
            out.append({"variant": variant, "k": args.k, "feasible": c is not None, "coloring": c})
        else:
            out.append(chromatic_value(g, variant))
    _emit(args, emit_json(_one_or_many(out), drop=("time",)))
    return EXIT_OK


def _load_colored(path: str) -> tuple[Graph, list[int]]:
    """A JSON document with ``graph6`` and ``coloring`` keys (the reproducer format)."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(doc, dict) or "graph6" not in doc or "coloring" not in doc:
        raise FormatError("expected an object with 'graph6' and 'coloring' keys", 0)
    coloring = doc["coloring"]
    if isinstance(coloring, dict):
        coloring = coloring.get("colors", [])
    return parse_graph6(doc["graph6"]), [int(c) for c in coloring]


def cmd_verify(args: argparse.Namespace) -> int:
    if not args.input:
        raise InvalidSpec("verify needs --input pointing at a JSON document with graph6 and coloring")
    g, colors = _load_colored(args.input)
    variant = Variant.parse(args.variant)
    report = verify(g, colors, variant)
    _emit(args, emit_json(report))
    return EXIT_OK if report.ok else EXIT_PRECONDITION


def cmd_construct(args: argparse.Namespace) -> int:
    if not args.theorem:
        raise InvalidSpec("construct needs --theorem")
    name, params = _parse_theorem(args.theorem)
    th = THEOREMS[name]
    if th.needs_graph:
        results = [th.run(g, args, params) for g in _graphs(args)]
    else:
        results = [th.run(None, args, params)]
    _emit(args, emit_json(_one_or_many(results)))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    if not args.family:
        raise InvalidSpec("generate needs --family")
    g = generate(_family(args))
    if args.output and args.output.endswith((".col", ".dimacs")):
        text = emit_dimacs(g)
    else:
        text = emit_graph6(g)
    _emit(args, text)
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    ids = parse_bounds(args.bounds)
    out = [{"graph": g, "records": audit_bounds(g, ids)} for g in _graphs(args)]
    _emit(args, emit_json(_one_or_many(out)))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    def progress(count: int) -> None:
        if count % 500 == 0:
            print(f"examined {count} graphs", file=sys.stderr, flush=True)

    workers = args.workers or 1
    if args.input:
        report = search_graphs(load_graph(args.input), workers=workers, progress=progress)
    else:
        if args.nmax is None:
            raise InvalidSpec("search needs --nmax or --input")
        report = search_conjecture(args.nmax, workers=workers, progress=progress)
    _emit(args, emit_json(report, drop=("runtime",)))
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "construct": cmd_construct,
    "generate": cmd_generate,
    "audit": cmd_audit,
    "search": cmd_search,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcfcolor", description="Proper conflict-free graph coloring toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--variant", default="pcf", help="pcf, cf, odd or proper")
        p.add_argument("--k", type=int, help="palette size for a decision query")
        p.add_argument("--theorem", help="construction to run, e.g. tree, skn, ab:2,3, mad2411")
        p.add_argument("--family", help="generated input, e.g. cycle:5, skn:4, tree:20")
        p.add_argument("--input", help="graph6 file (one graph per line) or DIMACS .col file")
        p.add_argument("--output", help="write the result here instead of stdout")
        p.add_argument("--nmax", type=int, help="largest order for the built-in enumeration")
        p.add_argument("--bounds", help="comma-separated bound ids, or 'all'")
        p.add_argument("--seed", type=int, help="seed for random families")
        p.add_argument("--n", type=int, help="order parameter for cycle, hypercube and skn constructions")
        p.add_argument("--workers", type=int, help="worker processes for search")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_FORMAT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (FormatError, InvalidSpec, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except PreconditionError as exc:
        print(f"precondition failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalContradiction as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        print(json.dumps(exc.reproducer, indent=2), file=sys.stderr)
        return EXIT_CONTRADICTION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
