"""Command-line entry point: ``givenness run | repl | check``."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .errors import GivennessError, ValidationError
from .repl import run_repl
from .scenario import load_config, load_scenario
from .trace import run_batch

EXIT_OK, EXIT_INVALID, EXIT_RUNTIME = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="givenness",
        description="Track cognitive status of dialogue entities and generate referring forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="replay a scenario and print its trace")
    run.add_argument("--scenario", required=True)
    run.add_argument("--config")
    run.add_argument("--trace-format", choices=("tsv", "json-lines"), default="tsv")

    repl = sub.add_parser("repl", help="interactive session")
    repl.add_argument("--config")

    check = sub.add_parser("check", help="validate a scenario file")
    check.add_argument("--scenario", required=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            scenario = load_scenario(args.scenario)
            print(f"ok: {len(scenario.world)} entities, {len(scenario.events)} turns, "
                  f"{len(scenario.queries)} queries")
        elif args.command == "run":
            config = load_config(args.config)
            trace = run_batch(load_scenario(args.scenario), config)
            sys.stdout.write(trace.render(args.trace_format))
        else:
            run_repl(load_config(args.config))
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (GivennessError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
