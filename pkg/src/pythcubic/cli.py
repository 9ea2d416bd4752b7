"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from typing import Sequence

from .field import DomainError, FieldParam, OrderElement, evaluate, refine_embeddings
from .report import FORMATS, render, write_atomic
from .sos import DEFAULT_MAX_M, pythagoras_length, squares_below_bruteforce, squares_below_structured
from .units import DEFAULT_EXP_BOX
from .verify import CLAIMS, PASS, FAIL, ClaimResult, VerificationReport, verify_claim

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


def parse_elem(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"--elem expects x,y,z, got {text!r}")
    try:
        return tuple(int(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise UsageError(f"--elem coordinates must be integers, got {text!r}") from None


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(text), int(text) + 1)
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"--range expects LO..HI, got {text!r}") from None
    if lo_i > hi_i:
        raise UsageError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


def parse_width(text: str) -> Fraction:
    try:
        w = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--width expects a positive rational, got {text!r}") from None
    if w <= 0:
        raise UsageError("--width must be positive")
    return w


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--exp-box", type=int, default=DEFAULT_EXP_BOX, help="bound B on unit exponents")
    common.add_argument("--width", default="1/1048576", help="root interval width for reported conjugates")

    parser = _Parser(prog="pythcubic", description="Sums of squares in the simplest cubic orders Z[rho].")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("length", parents=[common], help="minimal number of squares for an element")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--elem", required=True, help="x,y,z meaning x + y rho + z rho^2")
    p.add_argument("--max", type=int, default=DEFAULT_MAX_M, dest="max_m")

    p = sub.add_parser("squares", parents=[common], help="all squares totally below an element")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--elem", required=True, help="x,y,z meaning x + y rho + z rho^2")
    p.add_argument("--method", choices=("brute", "structured", "both"), default="brute")

    p = sub.add_parser("verify", parents=[common], help="reproduce a lemma, table or the main theorem")
    p.add_argument("claim", choices=CLAIMS + ("all",))
    p.add_argument("--range", dest="a_range", help="LO..HI (default depends on the claim)")
    p.add_argument("--a", type=int, help="single value of a")
    return parser


def _field(a: int) -> FieldParam:
    if a < -1:
        raise UsageError(f"--a must be >= -1, got {a}")
    return FieldParam(a)


def _conjugates(e: OrderElement, width: Fraction) -> list[list[str]]:
    emb = refine_embeddings(e.field, width)
    return [[str(iv.lo), str(iv.hi)] for iv in (evaluate(e, r) for r in emb.intervals)]


def cmd_length(args: argparse.Namespace) -> tuple[int, list[VerificationReport]]:
    if args.max_m < 0:
        raise UsageError("--max must be >= 0")
    f = _field(args.a)
    e = f.element(*parse_elem(args.elem))
    start = time.perf_counter()
    dec = pythagoras_length(e, args.max_m)
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    data = {
        "element": list(e.coords),
        "max_m": args.max_m,
        "length": dec.length if dec is not None else None,
        "witness_roots": [list(p.root.coords) for p in dec.parts] if dec is not None else None,
        "witness_squares": [list(p.square.coords) for p in dec.parts] if dec is not None else None,
        "conjugates": _conjugates(e, parse_width(args.width)) if not e.is_zero() else None,
    }
    if dec is None:
        data["message"] = f"no representation within max_m={args.max_m}"
    rep = VerificationReport("length", [f.a, f.a], [ClaimResult(f.a, PASS, elapsed, data)])
    return EXIT_OK, [rep]


def cmd_squares(args: argparse.Namespace) -> tuple[int, list[VerificationReport]]:
    f = _field(args.a)
    e = f.element(*parse_elem(args.elem))
    start = time.perf_counter()
    data: dict = {"element": list(e.coords), "method": args.method}
    lists = {}
    if args.method in ("brute", "both"):
        lists["brute"] = squares_below_bruteforce(e)
    if args.method in ("structured", "both"):
        lists["structured"] = squares_below_structured(e, args.exp_box)
    for name, cands in lists.items():
        data[name] = {
            "count": len(cands),
            "squares": [list(c.square.coords) for c in cands],
            "roots": [list(c.root.coords) for c in cands],
        }
    status = PASS
    if args.method == "both":
        equal = sorted(data["brute"]["squares"]) == sorted(data["structured"]["squares"])
        data["equal"] = equal
        status = PASS if equal else FAIL
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    rep = VerificationReport("squares", [f.a, f.a], [ClaimResult(f.a, status, elapsed, data)])
    return (EXIT_OK if status == PASS else EXIT_FAILED), [rep]


def cmd_verify(args: argparse.Namespace) -> tuple[int, list[VerificationReport]]:
    if args.a_range is not None and args.a is not None:
        raise UsageError("give either --a or --range, not both")
    a_range = None
    if args.a_range is not None:
        a_range = parse_range(args.a_range)
    elif args.a is not None:
        a_range = range(args.a, args.a + 1)
    if a_range is not None and a_range.start < -1:
        raise UsageError("a must be >= -1")
    claims = CLAIMS if args.claim == "all" else (args.claim,)
    reports = [verify_claim(c, a_range, args.exp_box) for c in claims]
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
    return code, reports


def _fmt(c: Sequence[int]) -> str:
    return ",".join(str(v) for v in c)


def summarize_length(d: dict) -> str:
    if d["length"] is None:
        return d["message"] + "\n"
    terms = " + ".join(f"({_fmt(r)})^2" for r in d["witness_roots"])
    return f"length {d['length']}\nwitness: {terms or '0'}\n"


def summarize_squares(d: dict) -> str:
    lines = []
    for name in ("brute", "structured"):
        if name in d:
            lines.append(f"{name}: {d[name]['count']} nonzero squares")
            lines.extend(f"  {_fmt(sq)}  = ({_fmt(r)})^2" for sq, r in zip(d[name]["squares"], d[name]["roots"]))
    if "equal" in d:
        lines.append("lists equal" if d["equal"] else "lists DIFFER")
    return "\n".join(lines) + "\n"


SUMMARIES = {"length": summarize_length, "squares": summarize_squares}

COMMANDS = {"length": cmd_length, "squares": cmd_squares, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, reports = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "text" and args.command in SUMMARIES:
        text = SUMMARIES[args.command](reports[0].results[0].data)
    else:
        text = render(reports, args.format)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    if code == EXIT_FAILED:
        for rep in reports:
            for r in rep.failures():
                print(f"{rep.claim}: failed at a={r.a}: {r.data}", file=sys.stderr)
    return code

if __name__ == "__main__":
    sys.exit(main())
