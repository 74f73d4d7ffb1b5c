"""Command-line entry points: check, betti, polarize, fuzz, enumerate.

Output is JSON (JSON-lines for fuzz/enumerate); --pretty renders
indented JSON and small human tables.  Exit codes: 0 ok, 2 parse error,
3 internal inconsistency (implication or classifier-soundness violation).
"""

from __future__ import annotations

import argparse
import json
import sys

from .betti import FieldSpec, betti_table
from .formats import (
    ParseError,
    ideal_to_json_obj,
    load_ideal,
    load_oriented,
)
from .harness import (
    EXIT_INCONSISTENT,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    FuzzConfig,
    classification_report,
    report_exit_code,
    run_enumerate,
    run_fuzz,
    worker_count,
)


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _dump(obj, pretty: bool) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=True)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _add_field_flag(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--field",
        default="q",
        help="coefficient field: q (rationals, default) or fp:<prime>",
    )


def cmd_check(args) -> int:
    graph = load_oriented(_read_source(args.path))
    field = FieldSpec.parse(args.field)
    report = classification_report(
        graph, field, run_engine=True, with_timings=args.timings
    )
    print(_dump(report, args.pretty))
    return report_exit_code(report)


def cmd_betti(args) -> int:
    ideal = load_ideal(_read_source(args.ideal))
    field = FieldSpec.parse(args.field)
    table = betti_table(ideal, field)
    rows = [
        {"i": i, "multidegree": dict(alpha.items()), "degree": alpha.degree, "rank": rank}
        for i, alpha, rank in table.rows()
    ]
    payload = {
        "ideal": ideal_to_json_obj(ideal),
        "field": str(field),
        "rows": rows,
        "regularity": table.regularity(),
    }
    if args.pretty:
        print(_dump(payload, True))
        print(f"\n  i  degree  rank  multidegree", file=sys.stderr)
        for i, alpha, rank in table.rows():
            print(f"  {i}  {alpha.degree:6d}  {rank:4d}  {alpha}", file=sys.stderr)
    else:
        print(_dump(payload, False))
    return EXIT_OK


def cmd_polarize(args) -> int:
    ideal = load_ideal(_read_source(args.ideal))
    polarized, var_map = ideal.polarize()
    payload = {
        "ideal": ideal_to_json_obj(ideal),
        "polarized": ideal_to_json_obj(polarized),
        "variable_map": {
            name: {"variable": v, "slot": s} for name, (v, s) in sorted(var_map.items())
        },
    }
    print(_dump(payload, args.pretty))
    return EXIT_OK


def _fuzz_config(args, mode: str) -> FuzzConfig:
    return FuzzConfig(
        n=args.n,
        max_weight=args.max_weight,
        count=getattr(args, "count", 1),
        seed=getattr(args, "seed", 0),
        field=FieldSpec.parse(args.field),
        mode=mode,
        verify_all=getattr(args, "verify_all", False),
        timeout_secs=args.timeout_secs,
    )


def _emit_rows(rows, summary, pretty: bool) -> None:
    for row in rows:
        print(_dump(row, False))
    print(_dump(summary, pretty))
    if pretty:
        s = summary["summary"]
        print("\n  tag                          count", file=sys.stderr)
        for tag, count in s["certificates_by_tag"].items():
            print(f"  {tag:28s} {count:5d}", file=sys.stderr)
        print(
            f"  decided {s['classifier_decided']}/{s['instances']}, "
            f"engine-verified {s['engine_verified']}, "
            f"counterexamples {len(s['conjecture_counterexamples'])}",
            file=sys.stderr,
        )


def cmd_fuzz(args) -> int:
    config = _fuzz_config(args, "fuzz")
    rows, summary = run_fuzz(config, workers=worker_count())
    _emit_rows(rows, summary, args.pretty)
    bad = summary["summary"]["implication_violations"]
    return EXIT_INCONSISTENT if bad else EXIT_OK


def cmd_enumerate(args) -> int:
    config = _fuzz_config(args, "enumerate")
    rows, summary = run_enumerate(config, workers=worker_count())
    _emit_rows(rows, summary, args.pretty)
    bad = summary["summary"]["implication_violations"]
    return EXIT_INCONSISTENT if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cwlkit",
        description="componentwise-linearity toolkit for weighted oriented edge ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="classify one weighted oriented graph")
    p_check.add_argument("path", nargs="?", default="-", help="input file or - for stdin")
    _add_field_flag(p_check)
    p_check.add_argument("--pretty", action="store_true")
    p_check.add_argument("--timings", action="store_true", help="include wall-clock timings")
    p_check.set_defaults(func=cmd_check)

    p_betti = sub.add_parser("betti", help="multigraded Betti table of an ideal")
    p_betti.add_argument("--ideal", required=True, help="ideal file (text or JSON)")
    _add_field_flag(p_betti)
    p_betti.add_argument("--pretty", action="store_true")
    p_betti.set_defaults(func=cmd_betti)

    p_pol = sub.add_parser("polarize", help="squarefree polarization of an ideal")
    p_pol.add_argument("--ideal", required=True, help="ideal file (text or JSON)")
    p_pol.add_argument("--pretty", action="store_true")
    p_pol.set_defaults(func=cmd_polarize)

    p_fuzz = sub.add_parser("fuzz", help="seeded random conjecture search")
    p_fuzz.add_argument("--n", type=int, default=5, help="max vertices")
    p_fuzz.add_argument("--max-weight", type=int, default=3)
    p_fuzz.add_argument("--count", type=int, default=1000)
    p_fuzz.add_argument("--seed", type=int, default=42)
    p_fuzz.add_argument("--verify-all", action="store_true", help="run the engine even when the classifier decides")
    p_fuzz.add_argument("--timeout-secs", type=float, default=60.0)
    _add_field_flag(p_fuzz)
    p_fuzz.add_argument("--pretty", action="store_true")
    p_fuzz.set_defaults(func=cmd_fuzz)

    p_enum = sub.add_parser("enumerate", help="exhaustive engine-verified enumeration")
    p_enum.add_argument("--n", type=int, default=3, help="exact vertex count")
    p_enum.add_argument("--max-weight", type=int, default=2)
    p_enum.add_argument("--timeout-secs", type=float, default=60.0)
    _add_field_flag(p_enum)
    p_enum.add_argument("--pretty", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"cwlkit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except FileNotFoundError as exc:
        print(f"cwlkit: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except ValueError as exc:
        print(f"cwlkit: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
