"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import replace
from fractions import Fraction
from typing import Sequence

from staircase.config import Caps, CapExceeded
from staircase.excited import Ambient, broken_boxes, generate_excited, render_diagram, three_adic_check
from staircase.excited import eyd_specialized_sum, g_via_eyd, gp_via_eyd
from staircase.holman import holman_f
from staircase.hyper import jacobi_parameters, jacobi_poly, sst_ratio
from staircase.numerics import format_rational, to_rational
from staircase.polyring import format_poly, gp_poly, grothendieck_poly, schur_poly
from staircase.shapes import Partition, StrictPartition, parse_shape
from staircase.tableaux import (
    count_sst,
    count_svt_formula,
    enumerate_ssvt_p,
    enumerate_sst,
    enumerate_svt,
    format_tableau,
)
from staircase.verify import Bounds, CHECKS, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Treats ``-11/2`` like ``-3``: a negative positional, not an option."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def _shape(text: str, strict: bool) -> Partition | StrictPartition:
    try:
        shape = parse_shape(text, strict=strict)
    except ValueError as exc:
        raise UsageError(f"cannot parse shape {text!r}: {exc}") from exc
    if not strict and isinstance(shape, StrictPartition):
        shape = shape.as_partition()
    return shape


def _rational(text: str) -> Fraction:
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not an exact rational: {text!r}") from exc


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_count(args: argparse.Namespace) -> int:
    strict = args.kind == "ssvt-p"
    shape = _shape(args.shape, strict)
    caps = args.caps
    tableaux = None
    if args.method == "formula":
        if args.kind == "sst":
            count = count_sst(shape, args.n)
        elif args.kind == "svt":
            count = count_svt_formula(shape, args.n)
        else:
            if shape.length > args.n:
                count = 0
            else:
                # no closed formula for shifted tableaux; Type B excited-diagram sum at x = beta = 1
                count = int(eyd_specialized_sum(shape, args.n, Ambient.SHIFTED))
    else:
        enumerate_fn = {"sst": enumerate_sst, "svt": enumerate_svt, "ssvt-p": enumerate_ssvt_p}[args.kind]
        tableaux = enumerate_fn(shape, args.n, caps)
        count = len(tableaux)
    payload = {"shape": str(shape), "n": args.n, "kind": args.kind, "count": str(count)}
    if args.dump and tableaux is not None:
        payload["tableaux"] = [format_tableau(t) for t in tableaux]
    text = str(count)
    if args.dump and tableaux is not None and not args.json:
        text = "\n\n".join(format_tableau(t) for t in tableaux) + ("\n\n" if tableaux else "") + text
    _emit(args, payload, text)
    return EXIT_OK


def cmd_ratio(args: argparse.Namespace) -> int:
    if args.n < args.k:
        raise UsageError(f"ratio needs n >= k, got k={args.k}, n={args.n}")
    value = sst_ratio(args.k, args.n)
    alpha, beta = jacobi_parameters(args.k, args.n)
    payload = {"k": args.k, "n": args.n, "ratio": format_rational(value)}
    text = format_rational(value)
    if args.verbose:
        payload.update(alpha=format_rational(alpha), beta=format_rational(beta))
        text += f"\nalpha = {format_rational(alpha)}\nbeta = {format_rational(beta)}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_jacobi(args: argparse.Namespace) -> int:
    if args.k < 0:
        raise UsageError("degree must be non-negative")
    a, b, z = _rational(args.alpha), _rational(args.beta), _rational(args.z)
    value = jacobi_poly(args.k, a, b, z)
    _emit(args, {"k": args.k, "alpha": str(a), "beta": str(b), "z": str(z), "value": format_rational(value)}, format_rational(value))
    return EXIT_OK


def cmd_holman(args: argparse.Namespace) -> int:
    shape = _shape(args.shape, False)
    if shape.length > args.n:
        raise UsageError(f"shape ({shape}) has more than n={args.n} rows")
    value = holman_f(shape, args.n, _rational(args.z))
    _emit(args, {"shape": str(shape), "n": args.n, "z": args.z, "value": format_rational(value)}, format_rational(value))
    return EXIT_OK


def cmd_poly(args: argparse.Namespace) -> int:
    strict = args.kind == "gp"
    shape = _shape(args.shape, strict)
    caps = args.caps
    if args.via == "eyd":
        if args.kind == "schur":
            raise UsageError("the excited-diagram route builds grothendieck or gp only")
        if shape.length > args.n:
            raise UsageError(f"shape ({shape}) has more than n={args.n} rows")
        p = g_via_eyd(shape, args.n, caps) if args.kind == "grothendieck" else gp_via_eyd(shape, args.n, caps)
    else:
        build = {"schur": schur_poly, "grothendieck": grothendieck_poly, "gp": gp_poly}[args.kind]
        p = build(shape, args.n, caps)
    text = format_poly(p) or "0"
    _emit(args, {"shape": str(shape), "n": args.n, "kind": args.kind, "terms": text.splitlines()}, text)
    return EXIT_OK


def cmd_eyd(args: argparse.Namespace) -> int:
    ambient = Ambient(args.ambient)
    shape = _shape(args.shape, ambient is Ambient.SHIFTED)
    if shape.length > args.n:
        raise UsageError(f"shape ({shape}) has more than n={args.n} rows")
    diagrams = generate_excited(shape, args.n, ambient)
    payload = {"shape": str(shape), "n": args.n, "ambient": ambient.value, "count": len(diagrams)}
    text = str(len(diagrams))
    if args.show_eyd:
        blocks = [render_diagram(d) for d in diagrams]
        payload["diagrams"] = blocks
        payload["broken"] = [[list(u) for u in sorted(broken_boxes(d))] for d in diagrams]
        text = "\n\n".join(blocks) + "\n\n" + text
    _emit(args, payload, text)
    return EXIT_OK


def cmd_three_adic(args: argparse.Namespace) -> int:
    if args.n < max(args.k - 1, 1):
        raise UsageError(f"need n >= k-1, got k={args.k}, n={args.n}")
    v, req, holds = three_adic_check(args.k, args.n)
    _emit(
        args,
        {"k": args.k, "n": args.n, "valuation": v, "required": req, "holds": holds},
        f"valuation {v} required {req} {'holds' if holds else 'FAILS'}",
    )
    return EXIT_OK if holds else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = Bounds()
    overrides = {k: getattr(args, k) for k in ("max_k", "max_n", "size_cap", "enum_n") if getattr(args, k) is not None}
    bounds = replace(bounds, **overrides)
    if args.inject_fault and args.inject_fault not in CHECKS:
        raise UsageError(f"unknown check {args.inject_fault!r}")
    report = run_verify(bounds, only=args.only, inject_fault=args.inject_fault)
    if args.json:
        print(json.dumps(report.as_dict()))
    else:
        print(report.format_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="staircase", description="Exact staircase tableau and Jacobi identities.")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--size-cap", type=_positive, default=None, help="max shape size for enumerations")
    common.add_argument("--max-n", type=_positive, default=None, help="max number of variables")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count tableaux")
    p.add_argument("shape", help="e.g. 3,2,1 or delta:4; empty string for the empty shape")
    p.add_argument("n", type=_positive)
    p.add_argument("kind", choices=["sst", "svt", "ssvt-p"])
    p.add_argument("method", choices=["formula", "enumerate"], nargs="?", default="formula")
    p.add_argument("--dump", action="store_true", help="print every enumerated tableau")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("ratio", parents=[common], help="Jacobi value of |SST(delta_k+1,n)|/|SST(delta_k,n)|")
    p.add_argument("k", type=_positive)
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("jacobi", parents=[common], help="evaluate P_k^(alpha,beta)(z)")
    p.add_argument("k", type=int)
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("z")
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("holman", parents=[common], help="evaluate the Holman F^(n)_lambda(z)")
    p.add_argument("shape")
    p.add_argument("n", type=_positive)
    p.add_argument("z")
    p.set_defaults(func=cmd_holman)

    p = sub.add_parser("poly", parents=[common], help="print a Schur, Grothendieck or GP polynomial")
    p.add_argument("shape")
    p.add_argument("n", type=_positive)
    p.add_argument("--kind", choices=["schur", "grothendieck", "gp"], default="grothendieck")
    p.add_argument("--via", choices=["tableaux", "eyd"], default="tableaux")
    p.add_argument("--dump", action="store_true", help="accepted for symmetry; polynomials always print in full")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("eyd", parents=[common], help="excited Young diagrams")
    p.add_argument("shape")
    p.add_argument("n", type=_positive)
    p.add_argument("--ambient", choices=[a.value for a in Ambient], default="straight")
    p.add_argument("--show-eyd", action="store_true", help="render each diagram")
    p.set_defaults(func=cmd_eyd)

    p = sub.add_parser("three-adic", parents=[common], help="3-adic valuation of |SSVT_P(sdelta_k, n)|")
    p.add_argument("k", type=_positive)
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_three_adic)

    p = sub.add_parser("verify", parents=[common], help="run the verification grid")
    p.add_argument("--max-k", type=_positive, default=None)
    p.add_argument("--enum-n", type=_positive, default=None, help="max n for brute-force enumeration checks")
    p.add_argument("--only", action="append", choices=sorted(CHECKS), help="restrict to named checks")
    p.add_argument("--inject-fault", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    env = Caps.from_env()
    args.caps = Caps(
        size=args.size_cap if args.size_cap is not None else env.size,
        n=args.max_n if args.max_n is not None else env.n,
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
