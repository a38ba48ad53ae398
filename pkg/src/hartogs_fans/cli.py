"""Command line: ``hartogs-fans validate|check|verify``.

Exit codes
    validate: 0 valid, 1 invalid fan, 2 unreadable input
    check:    0 Hartogs, 3 no Hartogs, 4 not applicable, 2 unreadable input
    verify:   0 certificate checks, 1 mismatch, 2 unreadable input
"""
from __future__ import annotations

import argparse
import sys

from .coloredfan import complete_face_closure, validate_fan
from .documents import DocumentError, dumps_report, format_text, load_document, load_report
from .errors import HartogsFansError
from .hartogs import verify_certificate_data

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_NO, EXIT_NA = 0, 1, 2, 3, 4


def cmd_validate(path: str, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        doc = load_document(path)
        fan = complete_face_closure(doc.fan) if doc.complete_faces else doc.fan
        violations = validate_fan(fan)
    except (DocumentError, HartogsFansError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    if not violations:
        print("valid colored fan", file=out)
        return EXIT_OK
    for v in violations:
        print(f"violation: {v}", file=out)
    return EXIT_INVALID


def cmd_check(path: str, fmt: str = "text", explain: bool = False, max_rank=None,
              out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        doc = load_document(path)
        report = doc.check(max_rank=max_rank)
    except (DocumentError, HartogsFansError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    out.write(dumps_report(report, explain) if fmt == "json" else format_text(report, explain))
    if report.hartogs is True:
        return EXIT_OK
    if report.hartogs is False:
        return EXIT_NO
    return EXIT_NA


def cmd_verify(report_path: str, input_path: str, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        verdict, cert = load_report(report_path)
        doc = load_document(input_path)
    except (DocumentError, HartogsFansError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    fan = complete_face_closure(doc.fan) if doc.complete_faces else doc.fan
    ok = verify_certificate_data(verdict, cert, fan, doc.max_rank)
    print("certificate verified" if ok else "certificate does NOT verify", file=out)
    return EXIT_OK if ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hartogs-fans", description="Hartogs phenomenon for spherical varieties")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("validate", help="check the colored-fan axioms")
    v.add_argument("file")
    c = sub.add_parser("check", help="decide compactifiability and the Hartogs phenomenon")
    c.add_argument("file")
    c.add_argument("--format", choices=["json", "text"], default="text")
    c.add_argument("--explain", action="store_true")
    c.add_argument("--max-rank", type=int, default=None)
    w = sub.add_parser("verify", help="re-check a report's certificate against its input")
    w.add_argument("report")
    w.add_argument("input")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "validate":
        return cmd_validate(args.file)
    if args.command == "check":
        return cmd_check(args.file, args.format, args.explain, args.max_rank)
    return cmd_verify(args.report, args.input)


if __name__ == "__main__":
    sys.exit(main())
