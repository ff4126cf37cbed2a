"""Command-line front end: enumeration, series, avoidance tables, bijections,
verification suites, and OEIS-style b-file output.

Exit codes: 0 on success (all checks pass), 1 on a verification failure,
2 on a usage error.  All output is byte-deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import sys

from . import gf, patterns, verify
from .core import PAscentSequence, enumerate_sequences, stats
from .patterns import Pattern
from .series import TSeries, scalar_coefficients

GF_NAMES = ("A", "R", "P", "G1u", "G1", "G", "H", "maxk")

# b-file index of the first emitted term, per generating function.  The
# sequence-counting series start at length 1 (their constant term is the
# empty-sequence convention); the Fishburn series P and the five-variable G
# are emitted from their t^0 term; the run-1 series G1 starts at t^2.
BFILE_FIRST_INDEX = {
    "A": 1, "R": 1, "H": 1, "maxk": 1,
    "P": 0, "G": 0,
    "G1": 2, "G1u": 2,
}


class _UsageError(Exception):
    pass


def _parse_seq(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad sequence {text!r}: letters must be comma-separated integers") from exc


def _parse_assignments(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for item in text.split(","):
        if "=" not in item:
            raise _UsageError(f"bad --set entry {item!r}: expected var=int")
        name, _, value = item.partition("=")
        name = name.strip()
        try:
            number = int(value)
        except ValueError as exc:
            raise _UsageError(f"bad --set value {value!r}: must be an integer") from exc
        if name == "all":
            for var in ("u", "v", "z", "x"):
                out[var] = number
        elif name in ("u", "v", "z", "x"):
            out[name] = number
        else:
            raise _UsageError(f"unknown variable {name!r} in --set (use u, v, z, x or all)")
    return out


def _sequence_stream(args):
    pred = None
    if args.updown:
        pred = lambda seq: stats(seq).up_down
    if args.pattern is not None:
        pat = Pattern.parse(args.pattern)
        base = patterns.iter_avoiders(args.p, pat, args.n, primitive_only=args.primitive)
    elif args.primitive:
        base = enumerate_sequences(args.p, args.n, pred=lambda s: stats(s).primitive)
    else:
        base = enumerate_sequences(args.p, args.n)
    for seq in base:
        if pred is None or pred(seq):
            yield seq


def _cmd_enumerate(args, out) -> int:
    if args.format == "json":
        rows = [list(seq.letters) for seq in _sequence_stream(args)]
        import json

        out.write(json.dumps(rows) + "\n")
    else:
        for seq in _sequence_stream(args):
            out.write(",".join(map(str, seq.letters)) + "\n")
    return 0


def _cmd_count(args, out) -> int:
    total = sum(1 for _ in _sequence_stream(args))
    out.write(f"{total}\n")
    return 0


def _build_series(args) -> TSeries:
    name = args.gf
    order = args.order
    if name != "P" and args.p is None:
        raise _UsageError(f"--gf {name} requires --p")
    if name == "A":
        series = gf.eval_A(args.p, order)
    elif name == "R":
        series = gf.eval_R(args.p, order)
    elif name == "P":
        series = gf.eval_P(order)
    elif name == "G1u":
        series = gf.eval_G1_u(args.p, order, args.udeg)
    elif name == "G1":
        series = gf.eval_G1_full(args.p, order)
    elif name == "G":
        series = gf.eval_G(args.p, order)
    elif name == "H":
        series = gf.eval_H(args.p, order, args.udeg)
    else:  # maxk
        if args.k is None:
            raise _UsageError("--gf maxk requires --k")
        series = gf.eval_maxk(args.p, args.k, order)
    if args.set:
        series = series.specialize(_parse_assignments(args.set))
    return series


def _cmd_series(args, out) -> int:
    series = _build_series(args)
    text = series.to_json() + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        out.write(text)
    return 0


def _avoid_columns(args) -> tuple[list[str], bool]:
    pat = Pattern.parse(args.pattern)
    mode = "both" if args.both else "closed" if args.closed else "oracle"
    lines = []
    equal = True
    brute = None
    if mode in ("oracle", "both"):
        brute = patterns.avoider_counts(args.p, pat, args.n, primitive_only=args.primitive)
    if mode == "oracle":
        lines = [f"{n} {brute[n]}" for n in range(1, args.n + 1)]
        return lines, True
    closed: list[int] | None
    try:
        closed = [
            patterns.closed_count(args.p, pat, n, primitive_only=args.primitive)
            for n in range(args.n + 1)
        ]
    except patterns.NoClosedFormError as exc:
        if mode == "closed":
            raise _UsageError(str(exc))
        print(f"pascent: {exc}; falling back to brute force", file=sys.stderr)
        closed = None
    if mode == "closed":
        lines = [f"{n} {closed[n]}" for n in range(1, args.n + 1)]
        return lines, True
    for n in range(1, args.n + 1):
        c = closed[n] if closed is not None else brute[n]
        lines.append(f"{n} {c} {brute[n]}")
        if c != brute[n]:
            equal = False
    return lines, equal


def _cmd_avoid(args, out) -> int:
    lines, equal = _avoid_columns(args)
    for line in lines:
        out.write(line + "\n")
    if not equal:
        print("pascent: closed form and brute force disagree", file=sys.stderr)
        return 1
    return 0


def _cmd_bijection(args, out) -> int:
    letters = _parse_seq(args.seq)
    if args.map == "10-to-012":
        result = patterns.bijection_10_to_012(PAscentSequence(2, letters))
    elif args.map == "012-to-10":
        result = patterns.bijection_012_to_10(PAscentSequence(2, letters))
    elif args.map == "embed":
        if args.p is None:
            raise _UsageError("--map embed requires --p (the parameter of the input)")
        result = patterns.embed(PAscentSequence(args.p, letters))
    else:  # project
        if args.p is None:
            raise _UsageError("--map project requires --p (the parameter of the output)")
        result = patterns.project(PAscentSequence(1, letters), args.p)
    out.write(",".join(map(str, result.letters)) + "\n")
    return 0


def _cmd_bfile(args, out) -> int:
    if args.gf is not None and args.avoid:
        raise _UsageError("choose one of --gf and --avoid")
    if args.gf is not None:
        series = _build_series(args)
        try:
            values = scalar_coefficients(series)
        except ValueError as exc:
            raise _UsageError(f"{exc}; specialize all variables with --set") from exc
        first = BFILE_FIRST_INDEX[args.gf]
        for n in range(first, len(values)):
            out.write(f"{n} {values[n]}\n")
        return 0
    if args.avoid:
        if args.pattern is None or args.n is None:
            raise _UsageError("--avoid requires --pattern and --n")
        pat = Pattern.parse(args.pattern)
        use_closed = args.closed
        if not args.closed and not args.oracle:
            try:
                patterns.closed_count(args.p, pat, 1, primitive_only=args.primitive)
                use_closed = True
            except patterns.NoClosedFormError:
                use_closed = False
        if use_closed:
            values = [
                patterns.closed_count(args.p, pat, n, primitive_only=args.primitive)
                for n in range(args.n + 1)
            ]
        else:
            values = patterns.avoider_counts(args.p, pat, args.n, primitive_only=args.primitive)
        for n in range(1, args.n + 1):
            out.write(f"{n} {values[n]}\n")
        return 0
    raise _UsageError("bfile needs either --gf or --avoid")


def _suite_reports(args) -> list[verify.CheckReport]:
    name = args.suite
    if name == "all":
        return verify.run_all(args.budget)
    order = args.order
    if name in verify.IDENTITY_NAMES:
        defaults = {"psi": 20, "jelinek": 30, "delta_gamma_calculus": 12}
        if order is None:
            order = defaults.get(name, 10)
        p = args.p if args.p is not None else (1 if name == "jelinek" else 2)
        return [verify.check_identity(name, p, order)]
    if name.startswith("oracle_"):
        gf_name = name[len("oracle_"):]
        if gf_name not in verify.ORACLE_GF_NAMES:
            raise _UsageError(f"unknown suite {name!r}")
        return [
            verify.check_oracle_vs(
                gf_name, args.p if args.p is not None else 2,
                order if order is not None else 6, args.k or 2,
            )
        ]
    if name in verify.PATTERN_SUITE_NAMES:
        p = args.p if args.p is not None else 2
        return [verify.check_pattern(name, p, order if order is not None else 8)]
    raise _UsageError(f"unknown suite {name!r}")


def _cmd_verify(args, out) -> int:
    reports = _suite_reports(args)
    for report in reports:
        out.write(report.to_json() + "\n")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pascent",
        description="Enumerate p-ascent sequences, evaluate their generating "
        "functions exactly, count pattern avoiders, and verify the identities "
        "connecting them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pn(sp, n_help):
        sp.add_argument("--p", type=int, required=True, help="ascent allowance, p >= 1")
        sp.add_argument("--n", type=int, required=True, help=n_help)

    sp = sub.add_parser("enumerate", help="list p-ascent sequences of a given length")
    add_pn(sp, "sequence length, n >= 0")
    sp.add_argument("--pattern", help="keep only sequences avoiding this pattern")
    sp.add_argument("--primitive", action="store_true", help="no equal adjacent letters")
    sp.add_argument("--updown", action="store_true", help="strictly alternating rise/fall")
    sp.add_argument("--format", choices=("lines", "json"), default="lines")

    sp = sub.add_parser("count", help="count instead of listing")
    add_pn(sp, "sequence length, n >= 0")
    sp.add_argument("--pattern")
    sp.add_argument("--primitive", action="store_true")
    sp.add_argument("--updown", action="store_true")

    sp = sub.add_parser("series", help="emit a generating function as JSON")
    sp.add_argument("--gf", choices=GF_NAMES, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--order", type=int, required=True, help="truncation order N")
    sp.add_argument("--k", type=int, help="repetition bound (maxk only)")
    sp.add_argument("--udeg", type=int, help="ascent-degree cutoff (G1u and H; default N)")
    sp.add_argument("--set", help="specializations, e.g. u=1,v=1 or all=1")
    sp.add_argument("--out", help="write JSON to this file instead of stdout")

    sp = sub.add_parser("avoid", help="table of pattern-avoider counts")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", type=int, required=True, help="largest length")
    sp.add_argument("--primitive", action="store_true")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--closed", action="store_true", help="closed form only")
    mode.add_argument("--oracle", action="store_true", help="brute force only (default)")
    mode.add_argument("--both", action="store_true", help="both columns, assert equality")

    sp = sub.add_parser("bijection", help="apply one of the structural maps")
    sp.add_argument(
        "--map", choices=("10-to-012", "012-to-10", "embed", "project"), required=True
    )
    sp.add_argument("--p", type=int, help="parameter for embed (input) or project (output)")
    sp.add_argument("--seq", required=True, help="comma-separated letters, empty for the empty word")

    sp = sub.add_parser("verify", help="run verification suites, print JSON reports")
    sp.add_argument("--suite", required=True, help="all, an identity name, oracle_<gf>, or a pattern suite")
    sp.add_argument("--p", type=int)
    sp.add_argument("--order", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--budget", type=int, default=6, help="max enumeration length for --suite all")

    sp = sub.add_parser("bfile", help="OEIS b-file lines 'n a(n)'")
    sp.add_argument("--gf", choices=GF_NAMES)
    sp.add_argument("--avoid", action="store_true")
    sp.add_argument("--p", type=int)
    sp.add_argument("--order", type=int, help="truncation order (with --gf)")
    sp.add_argument("--n", type=int, help="largest length (with --avoid)")
    sp.add_argument("--pattern")
    sp.add_argument("--primitive", action="store_true")
    sp.add_argument("--k", type=int)
    sp.add_argument("--udeg", type=int)
    sp.add_argument("--set", help="specializations, required until all variables are scalars")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--closed", action="store_true")
    mode.add_argument("--oracle", action="store_true")

    return parser


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "series": _cmd_series,
    "avoid": _cmd_avoid,
    "bijection": _cmd_bijection,
    "verify": _cmd_verify,
    "bfile": _cmd_bfile,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "p", None) is not None and args.p < 1:
        parser.error("--p must be at least 1")
    if getattr(args, "n", None) is not None and args.n < 0:
        parser.error("--n must be nonnegative")
    if getattr(args, "order", None) is not None and args.order < 0:
        parser.error("--order must be nonnegative")
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except _UsageError as exc:
        print(f"pascent: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"pascent: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    raise SystemExit(main())
