"""Command line front end: ``compute``, ``verify`` and ``catalog``."""

from __future__ import annotations

import argparse
import os
import sys

from procsm import catalog, scenario, suite
from procsm.errors import ArithmeticOverflow, InvalidBounds, ParseError, ProcsmError


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _input_error(exc: Exception) -> int:
    kind = "Overflow" if isinstance(exc, ArithmeticOverflow) else type(exc).__name__
    print(f"error: {kind}: {exc}", file=sys.stderr)
    return scenario.EXIT_INPUT


def cmd_compute(args) -> int:
    try:
        if os.path.isfile(args.source):
            with open(args.source, encoding="utf-8") as fh:
                sc = scenario.load_scenario_text(fh.read())
        else:
            sc = scenario.parse_scenario(catalog.get(args.source))
        report = scenario.run(sc, timing=args.timing)
    except OSError as exc:
        return _input_error(ParseError(str(exc)))
    except ProcsmError as exc:
        return _input_error(exc)
    if args.format == "json":
        _emit(scenario.to_json(report), args.out)
    else:
        _emit(scenario.render_text(report), args.out)
    return scenario.exit_code(report)


def cmd_verify(args) -> int:
    try:
        report = suite.verify_suite(
            seed=args.seed,
            max_dim=args.max_dim,
            max_components=args.max_components,
            max_multidegree=args.max_multidegree,
            count=args.count,
            jobs=args.jobs,
        )
    except (InvalidBounds, ArithmeticOverflow) as exc:
        return _input_error(exc)
    if args.format == "json":
        _emit(scenario.to_json(report), args.out)
    else:
        _emit(suite.render_text(report), args.out)
    return scenario.EXIT_OK if report["passed"] else scenario.EXIT_FAILED


def cmd_catalog(args) -> int:
    if args.show:
        try:
            entry = catalog.get(args.show)
        except ProcsmError as exc:
            return _input_error(exc)
        _emit(scenario.to_json(entry), args.out)
        return scenario.EXIT_OK
    entries = catalog.listing()
    width = max(len(name) for name, _ in entries)
    _emit("".join(f"{name:<{width}}  {desc}\n" for name, desc in entries), args.out)
    return scenario.EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="procsm",
        description="CSM classes and characteristic classes of SNC complements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="run a scenario file or a catalog entry")
    p.add_argument("source", help="path to a scenario JSON file, or a catalog name")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true", help="include wall-clock duration")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run the seeded randomized identity suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--max-components", type=int, default=4)
    p.add_argument("--max-multidegree", type=int, default=3)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list built-in scenarios")
    p.add_argument("--show", metavar="NAME", help="print the scenario JSON of one entry")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, which matches the input-error code
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
