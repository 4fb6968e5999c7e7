"""Command-line front-end: verify axioms, evaluate expressions, export matrices.

Exit status contract: 0 on success (all checks passing), 1 on runtime or
check failure, 2 on usage errors.  Identical inputs and seeds produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import axioms, expr, rep
from .cyclo import AlgebraContext
from .rep import DENSE_CAP_DEFAULT, DenseCapError


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, required=True, metavar="N",
                        help="order of the generators (>= 2)")
    common.add_argument("--n", type=int, default=1, metavar="QUDITS",
                        help="number of qudits (default 1)")
    common.add_argument("--zeta-sign", choices=["+", "-"], default=None,
                        help="square root of q: '+' for +exp(i*pi/N) (even N only), "
                             "'-' for -exp(i*pi/N)")
    common.add_argument("--format", choices=["json", "csv", "text"], default="text",
                        help="output format (default text)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks (default 0)")
    common.add_argument("--dense-cap", type=int, default=DENSE_CAP_DEFAULT,
                        help=f"largest dense dimension allowed (default {DENSE_CAP_DEFAULT})")
    common.add_argument("--output", default=None, metavar="PATH",
                        help="write output to PATH instead of stdout")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="gcalg",
        description="Exact generalized Clifford algebra toolkit: verification, "
                    "evaluation, and matrix export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", parents=[common],
                            help="run the identity-verification suite")
    verify.add_argument("--checks", nargs="*", default=None, metavar="NAME",
                        help=f"subset of checks to run (default all): {', '.join(axioms.ALL_CHECKS)}")
    evaluate = sub.add_parser("eval", parents=[common],
                              help="evaluate an element, state, or bra-ket expression")
    evaluate.add_argument("expression")
    matrix = sub.add_parser("matrix", parents=[common],
                            help="export the dense matrix of an element expression")
    matrix.add_argument("expression")
    sub.add_parser("gram", parents=[common],
                   help="export the Gram matrix of the ordered basis vectors")
    return parser


def _write(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _approx(value) -> str:
    z = value.to_complex()
    return f"{z.real:.12g},{z.imag:.12g}"


def _matrix_output(args, matrix, ctx) -> str:
    if args.format == "json":
        return json.dumps([[cell.to_json() for cell in row] for row in matrix],
                          indent=2) + "\n"
    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        for row in matrix:
            writer.writerow([_approx(cell) for cell in row])
        return buffer.getvalue()
    lines = []
    for row in matrix:
        lines.append("\t".join(expr.print_canonical(cell, ctx) for cell in row))
    return "\n".join(lines) + "\n"


def cmd_verify(args, parser) -> int:
    ctx = _context(args, parser)
    if args.checks is not None:
        unknown = [name for name in args.checks if name not in axioms.ALL_CHECKS]
        if unknown:
            parser.error(f"unknown check name(s): {', '.join(unknown)}")
    if args.format == "csv":
        parser.error("csv output is not available for verify")
    reports = axioms.run_suite(ctx, args.checks, seed=args.seed)
    if args.format == "json":
        text = json.dumps(axioms.suite_report(ctx, reports), indent=2) + "\n"
    else:
        lines = []
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            line = f"{report.name}: {status}"
            if report.counterexample:
                line += f" ({report.counterexample})"
            lines.append(line)
        failed = sum(1 for r in reports if not r.passed)
        lines.append(f"{len(reports) - failed}/{len(reports)} checks passed")
        text = "\n".join(lines) + "\n"
    _write(args, text)
    return 0 if all(r.passed for r in reports) else 1


def cmd_eval(args, parser) -> int:
    ctx = _context(args, parser)
    if args.format == "csv":
        parser.error("csv output is not available for eval")
    try:
        ast = expr.parse(args.expression)
        if ast.kind == "sandwich":
            kind, value = "scalar", expr.eval_scalar(ast, ctx)
        elif ast.kind == "apply":
            kind, value = "state", expr.eval_state(ast, ctx)
        else:
            kind, value = "element", expr.eval_element(ast, ctx)
    except (expr.ParseError, expr.EvalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    canonical = expr.print_canonical(value, ctx)
    if args.format == "json":
        payload = {"kind": kind, "canonical": canonical}
        if kind == "scalar":
            payload["scalar"] = value.to_json()
        elif kind == "state":
            payload["state"] = rep.state_to_json(value)
        else:
            payload["terms"] = [
                {"exps": list(exps), "coeff": coeff.to_json()}
                for exps, coeff in sorted(value.terms.items())
            ]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = canonical + "\n"
    _write(args, text)
    return 0


def cmd_matrix(args, parser) -> int:
    ctx = _context(args, parser)
    try:
        ast = expr.parse(args.expression)
        element = expr.eval_element(ast, ctx)
        matrix = rep.dense_matrix(element, cap=args.dense_cap)
    except (expr.ParseError, expr.EvalError, DenseCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write(args, _matrix_output(args, matrix, ctx))
    return 0


def cmd_gram(args, parser) -> int:
    ctx = _context(args, parser)
    if ctx.dim > args.dense_cap:
        print(f"error: dimension {ctx.dim} exceeds the dense cap {args.dense_cap}",
              file=sys.stderr)
        return 1
    vectors = [rep.ordered_basis_vector(ctx, digits) for digits in rep.basis_indices(ctx)]
    matrix = [[rep.scalar_product(vr, vc) for vc in vectors] for vr in vectors]
    _write(args, _matrix_output(args, matrix, ctx))
    return 0


def _context(args, parser) -> AlgebraContext:
    try:
        return AlgebraContext.from_sign(args.N, args.n, args.zeta_sign)
    except ValueError as exc:
        parser.error(str(exc))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": cmd_verify,
        "eval": cmd_eval,
        "matrix": cmd_matrix,
        "gram": cmd_gram,
    }
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
