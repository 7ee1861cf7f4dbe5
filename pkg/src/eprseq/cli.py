"""Command-line interface.

One verb per invocation::

    eprseq epr FILE            print the epr word of a serialized matrix
    eprseq pr FILE             print the pr-sequence
    eprseq minors FILE -k K    list the order-K principal minors
    eprseq classify SEQ        decide epr attainability over Z2
    eprseq classify-pr SEQ     decide pr attainability (characteristic 2)
    eprseq witness SEQ         write a witness matrix with a recipe header
    eprseq witness-pr SEQ      same for a pr-sequence
    eprseq enumerate -n N      write the attained-word catalog
    eprseq verify -n N         enumeration vs classifier cross-check
    eprseq check-theorems      run the sixteen-check suite

FILE may be ``-`` for standard input, and ``-o -`` writes to standard
output.  Exit status: 0 success / attainable / zero failures, 1 not
attainable or check failures, 2 usage or parse errors.  ``--jobs``
(default from EPRSEQ_JOBS) splits enumeration into ranges; output is
byte-identical for every job count.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import combinations

from .classify import classify_epr_z2, classify_pr_char2
from .gfield import GF2, GF4
from .matrix import MatrixFormatError, SymMatrix, read_matrix
from .sequence import OrderLimitError, compute_epr, compute_pr
from .verify import (
    DEFAULT_SEED,
    BoundExceededError,
    compare_with_classifier,
    enumerate_epr,
    theorem_suite,
)
from .witness import NotAttainableError, witness_epr_z2, witness_pr_char2, write_witness


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("EPRSEQ_JOBS", "1")))
    except ValueError:
        return 1


def _read_matrix_arg(path: str) -> SymMatrix:
    if path == "-":
        return read_matrix(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return read_matrix(fh.read())


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eprseq",
        description="principal rank characteristic sequences over GF(2) and GF(4)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("epr", help="epr word of a serialized symmetric matrix")
    p.add_argument("file", help="matrix file, or - for stdin")
    p.add_argument("--force", action="store_true", help="lift the order guardrail")

    p = sub.add_parser("pr", help="pr-sequence of a serialized symmetric matrix")
    p.add_argument("file")
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("minors", help="list order-K principal minors")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True, metavar="K")

    p = sub.add_parser("classify", help="decide epr attainability over Z2")
    p.add_argument("sequence")
    p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("classify-pr", help="decide pr attainability, characteristic 2")
    p.add_argument("sequence")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("witness", help="matrix attaining an epr word over GF(2)")
    p.add_argument("sequence")
    p.add_argument("-o", "--output", default=None, metavar="FILE")

    p = sub.add_parser("witness-pr", help="matrix attaining a pr-sequence over GF(2)")
    p.add_argument("sequence")
    p.add_argument("-o", "--output", default=None, metavar="FILE")

    p = sub.add_parser("enumerate", help="catalog of attained epr words at order N")
    p.add_argument("-n", type=int, required=True, metavar="N")
    p.add_argument("--field", choices=("gf2", "gf4"), default="gf2")
    p.add_argument("--catalog", default=None, metavar="FILE")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--force", action="store_true", help="allow the gated n=7 run")

    p = sub.add_parser("verify", help="enumeration vs classifier at order N")
    p.add_argument("-n", type=int, required=True, metavar="N")
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("check-theorems", help="run the verification suite")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--gf4-cases", type=int, default=1000)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return _dispatch(args)
    except (MatrixFormatError, OrderLimitError, BoundExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.verb == "epr":
        m = _read_matrix_arg(args.file)
        print(compute_epr(m, max_order=None if args.force else 24))
        return 0

    if args.verb == "pr":
        m = _read_matrix_arg(args.file)
        print(compute_pr(m, max_order=None if args.force else 24))
        return 0

    if args.verb == "minors":
        m = _read_matrix_arg(args.file)
        if not 0 <= args.k <= m.n:
            print(f"error: -k must be in 0..{m.n}", file=sys.stderr)
            return 2
        for subset in combinations(range(1, m.n + 1), args.k):
            det = m.principal_submatrix(subset).determinant()
            label = "{" + ",".join(map(str, subset)) + "}"
            print(f"{label}={m.spec.to_symbol(det)}")
        return 0

    if args.verb == "classify":
        verdict = classify_epr_z2(args.sequence)
        _print_verdict(verdict, args.json)
        return 0 if verdict.attainable else 1

    if args.verb == "classify-pr":
        verdict = classify_pr_char2(args.sequence)
        _print_verdict(verdict, args.json)
        return 0 if verdict.attainable else 1

    if args.verb == "witness":
        try:
            matrix, recipe = witness_epr_z2(args.sequence)
        except NotAttainableError as exc:
            print(exc.verdict.render())
            return 1
        stream, close = _open_out(args.output)
        try:
            write_witness(matrix, recipe, stream)
        finally:
            if close:
                stream.close()
        return 0

    if args.verb == "witness-pr":
        try:
            matrix, recipe = witness_pr_char2(args.sequence)
        except NotAttainableError as exc:
            print(exc.verdict.render())
            return 1
        stream, close = _open_out(args.output)
        try:
            write_witness(matrix, recipe, stream)
        finally:
            if close:
                stream.close()
        return 0

    if args.verb == "enumerate":
        jobs = args.jobs if args.jobs is not None else _default_jobs()
        spec = GF2 if args.field == "gf2" else GF4
        catalog = enumerate_epr(args.n, spec, jobs=jobs, force=args.force)
        stream, close = _open_out(args.catalog)
        try:
            stream.write(catalog.to_text())
        finally:
            if close:
                stream.close()
        return 0

    if args.verb == "verify":
        jobs = args.jobs if args.jobs is not None else _default_jobs()
        report = compare_with_classifier(args.n, jobs=jobs)
        sys.stdout.write(report.to_text())
        return 0 if report.ok else 1

    if args.verb == "check-theorems":
        print(f"seed {args.seed}")
        report = theorem_suite(
            max_n=args.max_n, seed=args.seed, gf4_cases=args.gf4_cases
        )
        sys.stdout.write(report.to_text())
        return 0 if report.ok else 1

    raise AssertionError(f"unhandled verb {args.verb!r}")


def _print_verdict(verdict, as_json: bool) -> None:
    if as_json:
        import json

        print(json.dumps(verdict.to_dict()))
    else:
        print(verdict.render())


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
