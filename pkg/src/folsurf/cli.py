"""Command-line surface.

Subcommands: ``check``, ``invariants``, ``decide``, ``zariski``,
``fibration``, and ``fixtures run``.  Exit codes: 0 on success, 1 on failed
checks or expectation mismatches, 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from .errors import ParseError
from .fixtures import load_bundled_files
from .scenario_io import (
    ScenarioDocument,
    fmt_rational,
    parse_scenario,
    run_pipeline,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _load(path_text: str) -> ScenarioDocument:
    path = Path(path_text)
    if not path.exists():
        raise ParseError(f"no such file: {path}", "$")
    return parse_scenario(path.read_text(encoding="utf-8"))


def _cmd_check(args) -> int:
    doc = _load(args.file)
    report = run_pipeline(doc)
    if report.validation is None:
        print("no surface scenario to validate")
        return EXIT_OK if report.ok else EXIT_CHECK_FAILED
    for c in report.validation.checks:
        tag = "skip" if c.passed is None else ("pass" if c.passed else "FAIL")
        detail = f"  ({c.detail})" if c.detail else ""
        print(f"[{tag}] {c.name}{detail}")
    for w in report.validation.warnings:
        print(f"warning: {w}")
    return EXIT_OK if report.validation.passed else EXIT_CHECK_FAILED


def _cmd_invariants(args) -> int:
    doc = _load(args.file)
    report = run_pipeline(doc)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_decide(args) -> int:
    doc = _load(args.file)
    report = run_pipeline(doc)
    if report.inconsistency is not None:
        print(f"inconsistent scenario: {report.inconsistency}")
        return EXIT_CHECK_FAILED
    if report.verdict is None:
        print("no verdict (validation failed or no surface scenario)")
        return EXIT_CHECK_FAILED
    print(f"verdict: {report.verdict.status}")
    for r in report.verdict.fired_rules:
        print(f"  {r.rule_id}: {r.comparison}  [{r.citation}]")
    if report.verdict.genus_bound is not None:
        print(f"  genus bound: {report.verdict.genus_bound}")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_zariski(args) -> int:
    doc = _load(args.file)
    report = run_pipeline(doc)
    if report.decomposition is None:
        print(report.inconsistency or "no decomposition (validation failed or K not pseudo-effective)")
        return EXIT_CHECK_FAILED
    print(f"P = {report.decomposition.nef_part}")
    if report.decomposition.negative_part:
        for name, value in report.decomposition.negative_part:
            print(f"N[{name}] = {fmt_rational(value)}")
    else:
        print("N = 0")
    for ch in report.chains:
        print(f"chain: [{', '.join(ch.curves)}]  e = {list(ch.self_intersections)}")
    if report.vol is not None:
        print(f"vol = {fmt_rational(report.vol)}")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_fibration(args) -> int:
    doc = _load(args.file)
    report = run_pipeline(doc)
    if report.modular is None:
        print(report.inconsistency or "no fibration block in document")
        return EXIT_CHECK_FAILED
    kappa, delta, chi = report.modular
    print(
        f"kappa = {fmt_rational(kappa)}, delta = {fmt_rational(delta)}, "
        f"chi = {fmt_rational(chi)}"
    )
    for c in report.fibration_checks:
        tag = "skip" if c.passed is None else ("pass" if c.passed else "FAIL")
        print(f"[{tag}] {c.name}  ({c.detail})")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_fixtures(args) -> int:
    if args.action != "run":
        print(f"unknown fixtures action {args.action!r}", file=sys.stderr)
        return EXIT_USAGE
    failures = 0
    for name, raw in load_bundled_files():
        if args.filter and args.filter not in name:
            continue
        doc = parse_scenario(raw)
        report = run_pipeline(doc)
        status = "PASS" if report.ok else "FAIL"
        if not report.ok:
            failures += 1
        print(f"[{status}] {name}: {doc.name}")
        if not report.ok:
            if report.inconsistency:
                print(f"    inconsistency: {report.inconsistency}")
            for failure in report.expectation_failures:
                print(f"    {failure}")
            if report.validation is not None:
                for c in report.validation.failures:
                    print(f"    failed check {c.name}: {c.detail}")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="folsurf",
        description="Exact invariants and integrability verdicts for foliated surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a scenario file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("invariants", help="full invariant report")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("decide", help="integrability verdict only")
    p.add_argument("file")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("zariski", help="Zariski decomposition and chains")
    p.add_argument("file")
    p.set_defaults(func=_cmd_zariski)

    p = sub.add_parser("fibration", help="modular invariants of the fibration block")
    p.add_argument("file")
    p.set_defaults(func=_cmd_fibration)

    p = sub.add_parser("fixtures", help="operate on the bundled fixture corpus")
    p.add_argument("action", choices=("run",))
    p.add_argument("--filter", default=None)
    p.set_defaults(func=_cmd_fixtures)

    return parser


def cli_main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
