"""Command-line interface.

Exit codes: 0 ok / verdict yes / reproduction passed, 1 verdict no or
nothing found, 2 bad arguments, 3 parse error, 4 period matrix outside the
Siegel space, 5 reproduction mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .abelian import NSClass, NonNumeric, NotInSiegel, PolarizationType, PolarizedVariety
from .criterion import BadDimension, check_class, generate_system, intersection_number
from .exterior import DimensionMismatch
from .families import REPRODUCTIONS, BadFamily, FamilyPoint, family_matrix, subfactor_matrix
from .ring import PolyParseError
from .solve import find_split, find_subvariety

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_SIEGEL = 4
EXIT_MISMATCH = 5


class ParseFailure(Exception):
    pass


class UsageFailure(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--H", type=int, default=8, help="height bound for searches (default 8)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="path to a JSON document")
    src.add_argument("--json", dest="inline", help="inline JSON document")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="nonsimple", description="Exact non-simplicity tests for abelian varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-system", parents=[common], help="print the equation system for (g, D, n)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--type", dest="ptype", help="comma separated type, entries may be names (default principal)")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("check", parents=[common], help="decide whether a class is an n-dimensional subvariety")
    p.add_argument("--class", dest="cls", help="class JSON, e.g. '{\"a13\": \"-1\"}'")
    p.add_argument("--n", type=int)

    p = sub.add_parser("find", parents=[common], help="search for an n-dimensional abelian subvariety")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-witnesses", type=int, default=8)
    p.add_argument("--subfactor", action="store_true", help="for a family point, use its factor variety")

    p = sub.add_parser("split", parents=[common], help="search for a splitting into elliptic curves")
    p.add_argument("--subfactor", action="store_true", help="for a family point, use its factor variety")

    p = sub.add_parser("reproduce", parents=[common], help="rerun a reference computation")
    p.add_argument("target", choices=sorted(REPRODUCTIONS))

    sub.add_parser("intersection", parents=[common], help="intersection number of g classes")
    return parser


# input handling ------------------------------------------------------------


def _load(args) -> dict:
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                data = json.load(fh)
        elif args.inline is not None:
            data = json.loads(args.inline)
        else:
            raise UsageFailure("need --input or --json")
    except OSError as exc:
        raise UsageFailure(f"cannot read input: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseFailure(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseFailure("top-level JSON must be an object")
    return data


def _variety(data: dict, subfactor: bool = False) -> PolarizedVariety:
    doc = data.get("variety", data)
    if not isinstance(doc, dict):
        raise ParseFailure("variety must be a JSON object")
    try:
        if "family" in doc:
            point = FamilyPoint.from_json(doc)
            return subfactor_matrix(point) if subfactor else family_matrix(point)
        return PolarizedVariety.from_json(doc)
    except (PolyParseError, BadFamily, DimensionMismatch, ValueError, TypeError) as exc:
        raise ParseFailure(str(exc)) from None


def _class(text_or_doc, g: int) -> NSClass:
    doc = text_or_doc
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseFailure(f"malformed class JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseFailure("class must be a JSON object")
    try:
        return NSClass.from_json(g, doc)
    except (PolyParseError, ValueError) as exc:
        raise ParseFailure(str(exc)) from None


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# commands ------------------------------------------------------------------


def cmd_gen_system(args) -> int:
    if not 1 <= args.n < args.g <= 6:
        raise UsageFailure(f"need 1 <= n < g <= 6, got n={args.n}, g={args.g}")
    try:
        D = PolarizationType.parse(args.ptype) if args.ptype else PolarizationType.principal(args.g)
    except (ValueError, TypeError) as exc:
        raise UsageFailure(f"bad type: {exc}") from None
    if D.g != args.g:
        raise UsageFailure(f"type {D} has length {D.g}, expected {args.g}")
    Z = None
    if args.input or args.inline is not None:
        V = _variety(_load(args))
        if V.g != args.g:
            raise UsageFailure(f"variety has g={V.g}, expected {args.g}")
        Z = V.Z
    system = generate_system(args.g, D, args.n, Z)
    _emit(args, system.to_text(), system.to_json())
    return EXIT_OK


def cmd_check(args) -> int:
    data = _load(args)
    V = _variety(data)
    cls_doc = args.cls if args.cls is not None else data.get("class")
    if cls_doc is None:
        raise UsageFailure("need a class via --class or a \"class\" entry")
    n = args.n if args.n is not None else data.get("n")
    if not isinstance(n, int):
        raise UsageFailure("need --n")
    cls = _class(cls_doc, V.g)
    if cls.g != V.g:
        raise UsageFailure(f"class lives on g={cls.g}, variety has g={V.g}")
    V.require_numeric()
    from .abelian import siegel_check

    if not siegel_check(V.Z):
        raise NotInSiegel("imaginary part of Z is not positive definite")
    report = check_class(cls, V, n)
    verdict = "YES" if report.verdict else "NO"
    lines = [verdict, f"condition (a): {'holds' if report.holds_a else 'fails'}"]
    for r, c, e in report.b_values:
        lines.append(f"r={r}: computed {c}, expected {e}{'' if c == e else '  <- mismatch'}")
    payload = {"verdict": verdict, "class": cls.to_json(), "n": n, "report": report.to_json()}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if report.verdict else EXIT_NO


def _render_solve(args, report, header: str) -> int:
    lines = [f"status: {report.status}", f"height bound: {report.height_bound}"]
    for w in report.witnesses:
        if isinstance(w, list):
            lines.append("witness: " + json.dumps([c.to_json() for c in w]))
        else:
            lines.append("witness: " + json.dumps(w.to_json()))
    path = report.diagnostics.get("path")
    if path:
        lines.append(f"path: {path}")
    _emit(args, "\n".join([header] + lines), report.to_json())
    return EXIT_OK if report.found else EXIT_NO


def cmd_find(args) -> int:
    V = _variety(_load(args), args.subfactor)
    if not 1 <= args.n <= V.g:
        raise UsageFailure(f"need 1 <= n <= g, got n={args.n}")
    if args.max_witnesses < 1:
        raise UsageFailure("--max-witnesses must be positive")
    report = find_subvariety(V, args.n, args.H, max_witnesses=args.max_witnesses, threads=args.threads)
    return _render_solve(args, report, f"find n={args.n} on g={V.g}")


def cmd_split(args) -> int:
    V = _variety(_load(args), args.subfactor)
    report = find_split(V, args.H, threads=args.threads)
    return _render_solve(args, report, f"split g={V.g}")


def cmd_reproduce(args) -> int:
    report = REPRODUCTIONS[args.target]()
    _emit(args, report.to_text(), report.to_json())
    if report.passed:
        return EXIT_OK
    diffs = report.diffs()
    if diffs:
        print(diffs, file=sys.stderr)
    return EXIT_MISMATCH


def cmd_intersection(args) -> int:
    data = _load(args)
    docs = data.get("classes")
    if not isinstance(docs, list) or not docs:
        raise ParseFailure("need a nonempty \"classes\" list")
    g = data.get("g", len(docs))
    if not isinstance(g, int) or g < 1:
        raise ParseFailure("\"g\" must be a positive integer")
    classes = [_class(d, g) for d in docs]
    if len(classes) != g:
        raise UsageFailure(f"need exactly g={g} classes, got {len(classes)}")
    value = intersection_number(classes)
    text = str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    _emit(args, text, {"intersection": text})
    return EXIT_OK


COMMANDS = {
    "gen-system": cmd_gen_system,
    "check": cmd_check,
    "find": cmd_find,
    "split": cmd_split,
    "reproduce": cmd_reproduce,
    "intersection": cmd_intersection,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.H < 1:
        parser.error("--H must be at least 1")
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return COMMANDS[args.command](args)
    except ParseFailure as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotInSiegel as exc:
        print(f"not in Siegel space: {exc}", file=sys.stderr)
        return EXIT_SIEGEL
    except (UsageFailure, NonNumeric, BadDimension, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
