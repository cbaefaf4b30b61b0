"""Command-line interface.

Examples::

    dwork-hgm dim -n 6
    dwork-hgm params -n 6 -w 1,1,1,2,2,5 --format json
    dwork-hgm system -w 1,1,1,2,2,5
    dwork-hgm verify -w 1,1,1,2,2,5 --order 60
    dwork-hgm table -n 6 --strict-oracle
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algebra import char_poly, format_rational, rational_roots
from .connection import connection_block, run_pipeline
from .dwork import dimension, format_monomial, orbit, parse_monomial, reduce
from .errors import DworkError, ParseError
from .hypergeom import extract_params, katz_oracle, verify_annihilation
from .serialize import combination_to_json, matrix_to_json, pipeline_to_json
from .table import build_table, format_table

COMMANDS = ("dim", "orbit", "reduce", "block", "system", "params", "oracle", "verify", "table")
NEEDS_MONOMIAL = {"orbit", "reduce", "block", "system", "params", "oracle", "verify"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="degree of the family (inferred from -w if omitted)")
    common.add_argument("-w", dest="monomial", help="comma-separated exponents, e.g. 1,1,1,2,2,5")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="dwork-hgm", description="Gauss-Manin blocks and hypergeometric "
                     "parameters for the Dwork family.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("dim", parents=[common], help="dimension of the module")
    sub.add_parser("orbit", parents=[common], help="eigenspace basis of a monomial")
    sub.add_parser("reduce", parents=[common], help="reduce a monomial to the basis")
    sub.add_parser("block", parents=[common], help="connection matrix block")
    sub.add_parser("system", parents=[common], help="every stage of the companion/residue pipeline")
    sub.add_parser("params", parents=[common], help="hypergeometric parameters from residues")
    sub.add_parser("oracle", parents=[common], help="parameters by multiset cancellation")
    verify = sub.add_parser("verify", parents=[common], help="exact series annihilation check")
    verify.add_argument("--order", type=int, default=60, help="series truncation order (default 60)")
    table = sub.add_parser("table", parents=[common], help="parameter table for all representatives")
    table.add_argument("--strict-oracle", action="store_true",
                       help="exit nonzero if any row disagrees with the oracle")
    table.add_argument("--jobs", type=int, default=1, help="worker processes for table rows")
    return parser


def _resolve(args) -> tuple[int | None, tuple[int, ...] | None]:
    w = None
    n = args.n
    if args.monomial is not None:
        w = parse_monomial(args.monomial)
        if n is not None and n != len(w):
            raise ParseError(f"-n {n} does not match the {len(w)} exponents of {format_monomial(w)}")
        n = len(w)
    if args.command in NEEDS_MONOMIAL and w is None:
        raise ParseError(f"{args.command} requires -w")
    if args.command in ("dim", "table") and n is None:
        raise ParseError(f"{args.command} requires -n")
    if n is not None and n < 2:
        raise ParseError("-n must be at least 2")
    return n, w


def _emit(fmt: str, data, text: str) -> None:
    print(json.dumps(data, indent=2) if fmt == "json" else text)


def _dispatch(args, n, w) -> int:
    fmt = args.format
    cmd = args.command
    if cmd == "dim":
        d = dimension(n)
        _emit(fmt, {"n": n, "dimension": d}, str(d))
    elif cmd == "orbit":
        basis = orbit(w)
        _emit(fmt, {"n": n, "basis": [list(b) for b in basis]},
              "\n".join(format_monomial(b) for b in basis))
    elif cmd == "reduce":
        c = reduce(1, w)
        data = {"monomial": list(w), **combination_to_json(c)}
        _emit(fmt, data, c.format())
    elif cmd == "block":
        b = connection_block(w)
        data = {"basis": [list(v) for v in b.basis], "matrix": matrix_to_json(b.mat)}
        text = "basis: " + " ".join(format_monomial(v) for v in b.basis) + "\n" + b.mat.format()
        _emit(fmt, data, text)
    elif cmd == "system":
        p = run_pipeline(w)
        if fmt == "json":
            _emit(fmt, pipeline_to_json(p), "")
        else:
            stages = [
                ("system dy/dlambda = A y", p.system.format("lambda")),
                ("cyclic change of basis S", p.cob.format("lambda")),
                ("companion S A S^-1 + S' S^-1", p.companion.format("lambda")),
                ("regularized (times 1/lambda)", p.regularized.N.format("lambda")),
                ("z = lambda^n (times 1/z)", p.zsystem.N.format("z")),
                ("residue at 0", p.res_zero.format("z")),
                ("residue at 1", p.res_one.format("z")),
                ("residue at infinity", p.res_infinity.format("z")),
            ]
            e0 = rational_roots(char_poly(p.res_zero))
            einf = rational_roots(char_poly(p.res_infinity))
            body = "\n\n".join(f"{title}:\n{m}" for title, m in stages)
            body += "\n\neigenvalues at 0: " + ", ".join(map(format_rational, e0))
            body += "\neigenvalues at infinity: " + ", ".join(map(format_rational, einf))
            print(body)
    elif cmd in ("params", "oracle"):
        params = extract_params(w) if cmd == "params" else katz_oracle(w)
        _emit(fmt, params.to_json(), str(params))
    elif cmd == "verify":
        params = extract_params(w)
        ok = verify_annihilation(w, args.order, params)
        data = {"monomial": list(w), "order": args.order, "params": params.to_json(), "annihilated": ok}
        _emit(fmt, data, f"{format_monomial(w)} {params}: {'annihilated' if ok else 'NOT annihilated'}"
              f" through order {args.order}")
        return 0 if ok else 1
    elif cmd == "table":
        rows = build_table(n, args.jobs)
        print(format_table(rows, fmt))
        if args.strict_oracle and not all(r.oracle_match for r in rows):
            return 1
    return 0


def _report_error(fmt: str, exc: Exception, monomial) -> None:
    record = {"error": type(exc).__name__, "message": str(exc)}
    if monomial is not None:
        record["monomial"] = list(monomial)
    if fmt == "json":
        print(json.dumps(record), file=sys.stderr)
    else:
        where = f" [{format_monomial(monomial)}]" if monomial is not None else ""
        print(f"error: {record['error']}{where}: {record['message']}", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json" if "json" in argv and "--format" in argv else "text"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        n, w = _resolve(args)
    except DworkError as exc:  # ParseError and monomial validation
        _report_error(fmt, exc, None)
        return 2
    try:
        return _dispatch(args, n, w)
    except DworkError as exc:
        _report_error(fmt, exc, w)
        return 1
    except ValueError as exc:  # out-of-range numeric options such as --order
        _report_error(fmt, exc, w)
        return 2


if __name__ == "__main__":
    sys.exit(main())
