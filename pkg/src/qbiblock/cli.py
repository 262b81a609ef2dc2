"""Command-line front end.

Subcommands
-----------
det / xi / lambda / vectors / inverse
    Closed forms of a graph given as a JSON file (or - for stdin), printed
    symbolically, or evaluated exactly at a rational q via --at.

verify
    Run the oracle-backed identity checks over the default corpus or over
    explicit graph files; exit 1 if any identity fails.

gen
    Emit a graph JSON (tree chain or seeded random bi-block graph) to stdout.

Exit codes: 0 success, 1 verification failure, 2 input error, 3
evaluation-domain error (q = -1, a refused condition violation, or a pole).
Rational literals are integers or fractions like 3/2; no decimal floats.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .closedform import (
    ConditionCheck,
    balance_constant,
    balance_vector,
    check_conditions,
    diagonal_weight_vector,
    graph_cofactor,
    graph_det,
    graph_inverse,
)
from .exactring import PoleError, parse_rational, rational_to_json
from .graph import (
    GraphError,
    build,
    graph_to_json,
    path_tree,
    random_biblock,
    specs_from_json,
)
from .oracle import default_corpus, verify_graph

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3

SCHEMA_VERSION = 1


class _InputError(Exception):
    pass


class _DomainError(Exception):
    pass


def _load_specs(path: str):
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                raw = handle.read()
    except OSError as exc:
        raise _InputError(f"cannot read graph file {path}: {exc}") from exc
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}: not valid JSON: {exc}") from exc
    try:
        return specs_from_json(obj)
    except GraphError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _build_graph(path: str):
    try:
        return build(_load_specs(path))
    except GraphError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _parse_at(text: str):
    try:
        q0 = parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _InputError(f"--at expects an exact rational like 2 or -3/5: {exc}") from exc
    if q0 == -1:
        raise _DomainError("q = -1 is outside the admissible domain")
    return q0


def _violations_json(check: ConditionCheck) -> list[dict]:
    return [
        {"block": v.block, "condition": v.condition, "witness": v.witness}
        for v in check.violations
    ]


def _warn_violations(check: ConditionCheck):
    for v in check.violations:
        print(f"warning: block {v.block} violates {v.condition}: {v.witness}", file=sys.stderr)


def _gate(g, q0, refuse: tuple[str, ...]) -> ConditionCheck:
    check = check_conditions(g, q0)
    refused = [v for v in check.violations if v.condition in refuse]
    if refused:
        details = "; ".join(f"block {v.block} {v.condition}: {v.witness}" for v in refused)
        raise _DomainError(f"q = {q0} violates admissibility conditions ({details})")
    return check


def _emit_json(payload: dict):
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _scalar_command(g, args, name: str, symbolic_value, refuse: tuple[str, ...]):
    """Shared body of det/xi/lambda: print symbolically or evaluate at --at."""
    if args.at is None:
        if args.format == "json":
            _emit_json({"schema": SCHEMA_VERSION, "command": name, "value": symbolic_value.to_json()})
        else:
            print(str(symbolic_value))
        return EXIT_OK
    q0 = _parse_at(args.at)
    check = _gate(g, q0, refuse)
    value = symbolic_value.eval_at(q0)
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "command": name,
                "at": rational_to_json(q0),
                "value": rational_to_json(value),
                "violations": _violations_json(check),
            }
        )
    else:
        _warn_violations(check)
        print(str(value))
    return EXIT_OK


def cmd_det(args) -> int:
    g = _build_graph(args.graph)
    return _scalar_command(g, args, "det", graph_det(g), refuse=())


def cmd_xi(args) -> int:
    g = _build_graph(args.graph)
    return _scalar_command(g, args, "xi", graph_cofactor(g), refuse=())


def cmd_lambda(args) -> int:
    g = _build_graph(args.graph)
    return _scalar_command(g, args, "lambda", balance_constant(g), refuse=("C1",))


def cmd_vectors(args) -> int:
    g = _build_graph(args.graph)
    x = balance_vector(g)
    y = diagonal_weight_vector(g)
    if args.at is None:
        if args.format == "json":
            _emit_json(
                {
                    "schema": SCHEMA_VERSION,
                    "command": "vectors",
                    "x": [e.to_json() for e in x],
                    "y": [e.to_json() for e in y],
                }
            )
        else:
            for i, e in enumerate(x):
                print(f"x[{i}] = {e}")
            for i, e in enumerate(y):
                print(f"y[{i}] = {e}")
        return EXIT_OK
    q0 = _parse_at(args.at)
    check = _gate(g, q0, refuse=("C1",))
    x_vals = [e.eval_at(q0) for e in x]
    y_vals = [e.eval_at(q0) for e in y]
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "command": "vectors",
                "at": rational_to_json(q0),
                "x": [rational_to_json(v) for v in x_vals],
                "y": [rational_to_json(v) for v in y_vals],
                "violations": _violations_json(check),
            }
        )
    else:
        _warn_violations(check)
        for i, v in enumerate(x_vals):
            print(f"x[{i}] = {v}")
        for i, v in enumerate(y_vals):
            print(f"y[{i}] = {v}")
    return EXIT_OK


def cmd_inverse(args) -> int:
    g = _build_graph(args.graph)
    inv = graph_inverse(g)
    if args.at is None:
        if args.format == "json":
            _emit_json(
                {
                    "schema": SCHEMA_VERSION,
                    "command": "inverse",
                    "value": [[inv[i, j].to_json() for j in range(g.n)] for i in range(g.n)],
                }
            )
        else:
            for i in range(g.n):
                print("\t".join(str(inv[i, j]) for j in range(g.n)))
        return EXIT_OK
    q0 = _parse_at(args.at)
    check = _gate(g, q0, refuse=("C1", "C2"))
    values = [[inv[i, j].eval_at(q0) for j in range(g.n)] for i in range(g.n)]
    if args.format == "json":
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "command": "inverse",
                "at": rational_to_json(q0),
                "value": [[rational_to_json(v) for v in row] for row in values],
                "violations": _violations_json(check),
            }
        )
    else:
        _warn_violations(check)
        for row in values:
            print("\t".join(str(v) for v in row))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.corpus == ["default"] or not args.corpus:
        corpus = default_corpus(args.seed)
    else:
        corpus = []
        for path in args.corpus:
            corpus.append((path, _load_specs(path)))

    def timed(item):
        name, specs = item
        started = time.perf_counter()
        report = verify_graph(specs, name)
        return report, (time.perf_counter() - started) * 1000.0

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(timed, corpus))
    else:
        results = [timed(item) for item in corpus]

    total_checks = sum(len(r.checks) for r, _ in results)
    failures = [
        (r.name, c) for r, _ in results for c in r.checks if not c.passed
    ]
    if args.json:
        for report, _ in results:
            payload = report.to_json()
            payload["schema"] = SCHEMA_VERSION
            _emit_json(payload)
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "summary": {
                    "graphs": len(results),
                    "checks": total_checks,
                    "failures": len(failures),
                    "seed": args.seed,
                },
            }
        )
    else:
        for report, elapsed_ms in results:
            status = "ok" if report.passed else "FAIL"
            print(f"{report.name:<16} n={report.vertex_count:<3} {status:<4} {elapsed_ms:8.1f} ms")
        if failures:
            for name, check in failures:
                print(f"FAIL {name} {check.name}: {check.witness}")
            print(f"{len(results)} graphs, {total_checks} identity checks, {len(failures)} FAILED")
        else:
            print(f"{len(results)} graphs, {total_checks} identity checks, all pass")
    return EXIT_OK if not failures else EXIT_VERIFY_FAILED


def cmd_gen(args) -> int:
    if args.kind == "tree":
        if args.n is None or args.n < 2:
            raise _InputError("gen --kind tree needs --n of at least 2")
        specs = path_tree(args.n)
    else:
        if args.blocks is None or args.blocks < 1:
            raise _InputError("gen --kind random needs --blocks of at least 1")
        if args.part_max is None or args.part_max < 1:
            raise _InputError("gen --kind random needs --part-max of at least 1")
        specs = random_biblock(args.seed, args.blocks, args.part_max)
    print(json.dumps(graph_to_json(specs), sort_keys=True, separators=(",", ":")))
    return EXIT_OK


def _add_formula_parser(sub, name: str, handler, help_text: str):
    parser = sub.add_parser(name, help=help_text)
    parser.add_argument("graph", help="graph JSON file, or - for stdin")
    parser.add_argument("--at", metavar="RATIONAL", help="evaluate exactly at q = p or p/q")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.set_defaults(handler=handler)


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbiblock",
        description="Exact q-distance matrices of bi-block graphs: closed forms and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_formula_parser(sub, "det", cmd_det, "determinant of the q-distance matrix")
    _add_formula_parser(sub, "xi", cmd_xi, "reduced cofactor of the q-distance matrix")
    _add_formula_parser(sub, "lambda", cmd_lambda, "the balance constant")
    _add_formula_parser(sub, "vectors", cmd_vectors, "the balance and diagonal-weight vectors")
    _add_formula_parser(sub, "inverse", cmd_inverse, "inverse of the q-distance matrix")

    verify = sub.add_parser("verify", help="run the identity checks over a corpus")
    verify.add_argument(
        "--corpus",
        nargs="*",
        default=["default"],
        help="'default' or a list of graph JSON files",
    )
    verify.add_argument("--seed", type=int, default=7, help="seed for the default corpus")
    verify.add_argument("--json", action="store_true", help="emit a JSON report stream")
    verify.add_argument("--jobs", type=int, default=1, help="worker threads (report order is fixed)")
    verify.set_defaults(handler=cmd_verify)

    gen = sub.add_parser("gen", help="emit a graph JSON to stdout")
    gen.add_argument("--kind", choices=("tree", "random"), required=True)
    gen.add_argument("--n", type=int, help="tree vertex count")
    gen.add_argument("--blocks", type=int, help="random: maximum block count")
    gen.add_argument("--part-max", dest="part_max", type=int, help="random: maximum part size")
    gen.add_argument("--seed", type=int, default=0, help="random: generator seed")
    gen.set_defaults(handler=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
