"""Command-line interface.

Exit status: 0 success, 1 computation error, 2 parse or usage error,
3 a law or cross-check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import determinant as D
from . import laws
from .matrix import identity, mat_scale, multiply
from .permutations import DEFAULT_CAP, Permutation, compose, decompose, invert, parity
from .textio import ParseError, format_element, parse_matrix_file, render_matrix

EXIT_OK, EXIT_COMPUTE, EXIT_PARSE, EXIT_CHECK = 0, 1, 2, 3

ALGORITHMS = ("leibniz", "cofactor", "expand-row", "expand-col")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


class _CheckFailed(Exception):
    pass


def _algorithm(text: str) -> tuple[str, int]:
    name, _, index = text.partition(":")
    if name not in ALGORITHMS:
        raise argparse.ArgumentTypeError(f"unknown algorithm {name!r}")
    if index and name not in ("expand-row", "expand-col"):
        raise argparse.ArgumentTypeError(f"{name} takes no index")
    try:
        return name, int(index or 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index in {text!r}") from None


def _perm(text: str) -> Permutation:
    try:
        return Permutation(int(s) for s in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest n for permutation enumeration (default %(default)s)")
    common.add_argument("--seed", type=int, default=20240101)
    common.add_argument("--format", choices=("plain", "machine"), default="plain")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="ringdet", description="Exact determinants over commutative rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("det", parents=[common], help="determinant of a square matrix")
    p.add_argument("--algorithm", type=_algorithm, default=("cofactor", 0),
                   help="leibniz | cofactor | expand-row[:i] | expand-col[:j]")
    p.add_argument("--cross-check", action="store_true",
                   help="compute by every algorithm and require agreement")
    p.add_argument("file")

    p = sub.add_parser("adjoint", parents=[common], help="classical adjoint")
    p.add_argument("--verify", action="store_true", help="check a * adj(a) == det(a) * I")
    p.add_argument("file")

    p = sub.add_parser("charpoly", parents=[common], help="det(tI - A)")
    p.add_argument("file")

    p = sub.add_parser("check", parents=[common], help="run the determinant laws on a matrix")
    p.add_argument("file")

    p = sub.add_parser("perm", parents=[common], help="permutation utilities")
    p.add_argument("action", choices=("parity", "compose", "invert", "decompose"))
    p.add_argument("perms", nargs="+", type=_perm, metavar="IMAGES",
                   help="comma-separated image list, e.g. 1,2,0")
    return parser


def _emit(args, payload: dict, plain: str) -> None:
    if args.format == "machine":
        print(json.dumps({"command": args.command, **payload}, sort_keys=True, separators=(",", ":")))
    else:
        print(plain)


def _load(args):
    notes: list = []
    ring, a = parse_matrix_file(args.file, notes)
    if args.verbose:
        for line, column, message in notes:
            print(f"{args.file}:{line}:{column}: note: {message}", file=sys.stderr)
    return ring, a


def _det_by(a, name: str, index: int, cap: int):
    def minor_det(m):
        return D.det(m, cap=cap) if m.nrows <= cap else D.det_rec(m)

    if name == "leibniz":
        return D.det(a, cap=cap)
    if name == "cofactor":
        return D.det_rec(a)
    if a.nrows < 2:
        return a.rows[0][0]
    if name == "expand-row":
        return D.expand_row(a, index, det_fn=minor_det)
    return D.expand_col(a, index, det_fn=minor_det)


def run_det(args) -> int:
    ring, a = _load(args)
    name, index = args.algorithm
    value = _det_by(a, name, index, args.cap)
    if args.cross_check:
        others = {"cofactor": D.det_rec(a)}
        if a.nrows <= args.cap:
            others["leibniz"] = D.det(a, cap=args.cap)
        for k in range(a.nrows if a.nrows >= 2 else 0):
            others[f"expand-row:{k}"] = _det_by(a, "expand-row", k, args.cap)
            others[f"expand-col:{k}"] = _det_by(a, "expand-col", k, args.cap)
        bad = sorted(k for k, v in others.items() if not ring.eq(v, value))
        if bad:
            raise _CheckFailed(f"algorithms disagree: {', '.join(bad)}")
    text = format_element(ring, value)
    _emit(args, {"ring": ring.descriptor, "value": text}, text)
    return EXIT_OK


def run_adjoint(args) -> int:
    ring, a = _load(args)
    if not a.is_square or a.nrows < 2:
        raise ValueError(f"adjoint needs a square matrix of size >= 2, got {a.dims[0]}x{a.dims[1]}")

    def minor_det(m):
        return D.det(m, cap=args.cap) if m.nrows <= args.cap else D.det_rec(m)

    adj = D.adjoint(a, det_fn=minor_det)
    if args.verify:
        expected = mat_scale(D.det_rec(a), identity(ring, a.nrows))
        if multiply(a, adj) != expected:
            raise _CheckFailed("a * adj(a) != det(a) * I")
    _emit(
        args,
        {"ring": ring.descriptor, "matrix": [[format_element(ring, x) for x in r] for r in adj.rows]},
        render_matrix(adj).rstrip("\n"),
    )
    return EXIT_OK


def run_charpoly(args) -> int:
    _, a = _load(args)
    ring, poly = D.charpoly(a, cap=args.cap)
    text = format_element(ring, poly)
    _emit(args, {"ring": ring.descriptor, "value": text}, text)
    return EXIT_OK


def run_check(args) -> int:
    _, a = _load(args)
    results = laws.run_checks(a, seed=args.seed, cap=args.cap)
    failed = [r for r in results if r.failed]
    if args.format == "machine":
        _emit(args, {"results": {r.name: r.status for r in results}, "failed": len(failed)}, "")
    else:
        for r in results:
            print(f"{r.status.upper():4}  {r.name}" + (f"  ({r.detail})" if r.detail else ""))
        print(f"{len(results) - len(failed)}/{len(results)} laws hold")
    return EXIT_CHECK if failed else EXIT_OK


def run_perm(args) -> int:
    perms = args.perms
    expected = {"parity": 1, "invert": 1, "decompose": 1, "compose": 2}[args.action]
    if len(perms) != expected:
        raise _UsageError(f"perm {args.action} takes {expected} permutation(s), got {len(perms)}")

    def fmt(p):
        return ",".join(map(str, p))

    if args.action == "parity":
        text = "odd" if parity(perms[0]) else "even"
    elif args.action == "compose":
        if len(perms[0]) != len(perms[1]):
            raise ValueError(f"degree mismatch: {len(perms[0])} != {len(perms[1])}")
        text = fmt(compose(*perms))
    elif args.action == "invert":
        text = fmt(invert(perms[0]))
    else:
        text = " ".join(fmt(t) for t in decompose(perms[0]))
    _emit(args, {"action": args.action, "value": text}, text)
    return EXIT_OK


COMMANDS = {
    "det": run_det,
    "adjoint": run_adjoint,
    "charpoly": run_charpoly,
    "check": run_check,
    "perm": run_perm,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"ringdet: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"ringdet: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _CheckFailed as exc:
        print(f"ringdet: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except ValueError as exc:
        print(f"ringdet: error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
