"""Command-line front end.

    dgroups analyze SPEC          class table, defect, verdict, property checks
    dgroups verify-corpus         check every curated group against its expected result
    dgroups sweep N               all subgroups of S_N (N = 6 needs --include-s6)
    dgroups family [SPEC]         list family tags, or build one and print generators

Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .families import FAMILIES, FamilyError, SpecError, parse_spec
from .fields import FieldError
from .group import LIMITS, CapExceeded, GroupError
from .harness import analyze, render_text, sweep, to_json, verify_corpus
from .perm import PermutationError

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _emit(args, command, entries, violations, runtime_ms, **extra) -> None:
    shown = runtime_ms if args.timing else None
    if args.format == "json":
        sys.stdout.write(to_json(command, entries, violations, shown, **extra))
    else:
        sys.stdout.write(render_text(command, entries, violations, shown, **extra))


def _cmd_analyze(args) -> int:
    report = analyze(parse_spec(args.spec))
    violations = []
    if report["verdict"].startswith("INCONSISTENT"):
        violations.append({"name": report["name"], "issue": report["verdict"]})
    _emit(args, "analyze", [report], violations, None)
    return EXIT_MISMATCH if violations else EXIT_OK


def _cmd_verify(args) -> int:
    rep = verify_corpus()
    _emit(args, "verify-corpus", rep.entries, rep.violations, rep.runtime_ms)
    return rep.exit_code


def _cmd_sweep(args) -> int:
    if args.n == 6 and not args.include_s6:
        print("sweep 6 is heavy; pass --include-s6 to run it", file=sys.stderr)
        return EXIT_INPUT
    if not 3 <= args.n <= 6:
        print("sweep needs 3 <= N <= 6", file=sys.stderr)
        return EXIT_INPUT
    rep = sweep(args.n)
    _emit(args, "sweep", [], rep.violations, rep.runtime_ms,
          universe=rep.universe, subgroup_count=rep.subgroup_count,
          defect_histogram={str(k): v for k, v in rep.defect_histogram.items()},
          summary=rep.summary)
    return rep.exit_code


def _cmd_family(args) -> int:
    if args.spec is None:
        rows = [{"tag": tag, "family": fam, "parameters": arity} for tag, (fam, _, arity) in FAMILIES.items()]
        rows.append({"tag": "gens", "family": "raw_generators", "parameters": 0})
        if args.format == "json":
            sys.stdout.write(json.dumps({"families": rows}, sort_keys=True, indent=2) + "\n")
        else:
            for r in rows:
                print(f"{r['tag']:<10} {r['family']}")
        return EXIT_OK
    spec = parse_spec(args.spec)
    G = spec.build()
    info = {
        "name": str(spec),
        "order": G.order,
        "degree": G.degree,
        "generators": [g.to_cycles() for g in G.generators],
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(info, sort_keys=True, indent=2) + "\n")
    else:
        print(f"{info['name']}: order {info['order']} on {info['degree']} points")
        for g in info["generators"]:
            print(f"  {g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-order", type=int, default=None, metavar="N",
                        help="override the group generation cap (default %d)" % LIMITS.max_order)
    common.add_argument("--timing", action="store_true",
                        help="report runtime_ms (omitted by default so output is reproducible)")

    parser = argparse.ArgumentParser(prog="dgroups", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="analyze one group")
    p.add_argument("spec", help='e.g. "psl2:7" or "gens:(1 2 3 4 5),(1 2)@5"')
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify-corpus", parents=[common], help="verify the curated corpus")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="classify every subgroup of S_N")
    p.add_argument("n", type=int)
    p.add_argument("--include-s6", action="store_true", help="allow the S_6 sweep")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("family", parents=[common], help="list or build group families")
    p.add_argument("spec", nargs="?")
    p.set_defaults(func=_cmd_family)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    saved = LIMITS.max_order
    if args.max_order is not None:
        LIMITS.max_order = args.max_order
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (SpecError, FamilyError, FieldError, PermutationError, GroupError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        LIMITS.max_order = saved


if __name__ == "__main__":
    sys.exit(main())
