"""Command line front end.

Subcommands: gen, invariant, recognize, cover, solve, verify.  Graph input
comes from a file argument or stdin in graph6, edge list, or DIMACS form.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 capacity, 4 no constructive path for the class, 5 solver budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from .covers import (
    bipartite_cover,
    certificate_to_json,
    chi_le_k_cover,
    chibound_cover,
)
from .formats import ParseError, emit_graph6, parse_graph
from .generators import parse_family_spec
from .graphs import CapacityError, Graph
from .invariants import chromatic_number, clique_number
from .recognizers import in_class, is_perfect, parse_class_spec
from .solver import BudgetError, SolveBudget, decide_cover, exact_cover_number
from .verify import run_suite

CONSTRUCTIVE_KINDS = ("bipartite", "chi-le", "chi-le-f")


def _read_graph(args: argparse.Namespace) -> Graph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_graph(text, args.format)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_gen(args: argparse.Namespace) -> int:
    print(emit_graph6(parse_family_spec(args.family)))
    return 0


def _cmd_invariant(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    want_chi = args.chi or not (args.chi or args.omega)
    want_omega = args.omega or not (args.chi or args.omega)
    out = {}
    if want_chi:
        chi, coloring = chromatic_number(g)
        out["chi"] = chi
        out["coloring"] = list(coloring.colors)
    if want_omega:
        omega, witness = clique_number(g)
        out["omega"] = omega
        out["clique"] = list(witness.vertices)
    _emit(out)
    return 0


def _cmd_recognize(args: argparse.Namespace) -> int:
    spec = parse_class_spec(args.cls)
    g = _read_graph(args)
    witness = in_class(g, spec)
    out = {"class": str(spec), "member": witness is not None, "witness": witness}
    if witness is None and spec.kind == "perfect":
        ok, bad = is_perfect(g)
        assert not ok and bad is not None
        out["witness"] = {"kind": bad[0], "vertices": list(bad[1])}
    _emit(out)
    return 0


def _cmd_cover(args: argparse.Namespace) -> int:
    spec = parse_class_spec(args.cls)
    if spec.kind not in CONSTRUCTIVE_KINDS:
        print(
            f"no constructive cover for class {spec}; "
            f"use `covernum solve --class {spec}` for the exact oracle",
            file=sys.stderr,
        )
        return 4
    g = _read_graph(args)
    if spec.kind == "bipartite":
        cert = bipartite_cover(g)
    elif spec.kind == "chi-le":
        cert = chi_le_k_cover(g, spec.k)
    else:
        cert = chibound_cover(g, spec.f)
    _emit(certificate_to_json(cert))
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    spec = parse_class_spec(args.cls)
    g = _read_graph(args)
    budget = SolveBudget(max_edges=args.max_edges)
    if args.decision is not None:
        cert = decide_cover(g, spec, args.decision, budget)
        out = {
            "class": str(spec),
            "decision": args.decision,
            "present": cert is not None,
            "certificate": certificate_to_json(cert) if cert is not None else None,
        }
        _emit(out)
        return 0
    res = exact_cover_number(g, spec, budget)
    out = {
        "class": str(spec),
        "value": res.value,
        "method": res.stats.method,
        "family_size": res.stats.family_size,
        "nodes": res.stats.nodes,
        "certificate": certificate_to_json(res.certificate),
    }
    _emit(out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    workers = int(os.environ.get("COVERNUM_THREADS", "1"))
    start = time.monotonic()
    report = run_suite(
        args.suite,
        n_max=args.n_max,
        samples=args.samples,
        seed=args.seed,
        workers=workers,
    )
    elapsed = time.monotonic() - start
    _emit(report)
    # stdout stays deterministic for golden files; timing goes to stderr
    print(f"# suite {args.suite}: {elapsed:.1f}s", file=sys.stderr)
    return 0 if report["passed"] else 1


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-",
                   help="graph file, or - for stdin (default)")
    p.add_argument("--format", choices=("graph6", "edgelist", "dimacs"),
                   default=None, help="force input format instead of auto-detect")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covernum",
        description="Exact edge covers of graphs by hereditary-style classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a named family graph as graph6")
    p.add_argument("family", help="e.g. complete:4, cycle:5, hypercube:3, kkl:2,4")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("invariant", help="chromatic and clique numbers with witnesses")
    _add_input_args(p)
    p.add_argument("--chi", action="store_true", help="chromatic number only")
    p.add_argument("--omega", action="store_true", help="clique number only")
    p.set_defaults(fn=_cmd_invariant)

    p = sub.add_parser("recognize", help="class membership with witness")
    _add_input_args(p)
    p.add_argument("--class", dest="cls", required=True,
                   help="bipartite | chi-le:<k> | chi-le-f:<f> | chi-eq-omega | "
                        "perfect | unipolar | co-unipolar | gsp")
    p.set_defaults(fn=_cmd_recognize)

    p = sub.add_parser("cover", help="formula-sized cover by construction")
    _add_input_args(p)
    p.add_argument("--class", dest="cls", required=True,
                   help="constructive classes: bipartite, chi-le:<k>, chi-le-f:<f>")
    p.add_argument("--construct", action="store_true",
                   help="accepted for symmetry; construction is the only mode")
    p.set_defaults(fn=_cmd_cover)

    p = sub.add_parser("solve", help="exact minimum cover by enumeration")
    _add_input_args(p)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--decision", type=int, default=None, metavar="K",
                   help="decide coverability with at most K parts")
    p.add_argument("--max-edges", type=int, default=SolveBudget().max_edges,
                   help="enumeration budget (default %(default)s)")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("verify", help="run a cross-checking suite")
    p.add_argument("suite", help="hhm | chibound | chain | far3 | hypercube | "
                                 "arithmetic | inclusion")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetError as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return 5
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
