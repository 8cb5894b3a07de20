"""Command-line front end: ``hedonic {check,solve,verify,survey,examples}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import HedonicError, Partition, PreconditionError
from .gamefile import bundled_text, load_game
from .oracle import GROUP_SCAN_CAP, cost_estimate, survey
from .restrictions import check_all
from .solvers import deviation_dynamics, find_gdot_maximal_IR, top_covering
from .stability import Concept, check

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
ALGORITHMS = ("tca", "dynamics-is", "dynamics-sis", "maximal-ir")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_check(args) -> int:
    game = load_game(args.file)
    verdicts = check_all(game.profile)
    lines, records = [], []
    for name, v in verdicts.items():
        if v is None:
            lines.append(f"{name:<10} n/a (base restriction fails)")
            records.append({"restriction": name, "holds": None, "witness": None})
            continue
        mark = "✓" if v.holds else "✗"
        lines.append(f"{name:<10} {mark}" + ("" if v.holds else f"  {v.witness}"))
        records.append({
            "restriction": name,
            "holds": v.holds,
            "witness": None if v.witness is None else {
                "condition": v.witness.condition,
                "players": list(v.witness.players),
                "coalitions": [sorted(c) for c in v.witness.coalitions],
            },
        })
    _emit(args, {"file": str(args.file), "restrictions": records}, "\n".join(lines))
    return EXIT_OK


def cmd_solve(args) -> int:
    game = load_game(args.file)
    profile = game.profile
    try:
        if args.algorithm == "tca":
            pi, trace = top_covering(profile)
            trace_lines = trace.lines()
        elif args.algorithm == "maximal-ir":
            pi = find_gdot_maximal_IR(profile)
            trace_lines = []
        else:
            pi, trace = deviation_dynamics(profile, mode=args.algorithm.split("-")[1])
            trace_lines = trace.lines()
    except PreconditionError as exc:
        w = exc.verdict.witness if exc.verdict is not None else None
        _emit(args, {"refused": str(exc), "witness": None if w is None else str(w)}, f"refused: {exc}")
        return EXIT_FAIL
    _emit(args, {"algorithm": args.algorithm, "partition": str(pi), "trace": trace_lines},
          "\n".join([str(pi), *trace_lines]))
    return EXIT_OK


def cmd_verify(args) -> int:
    game = load_game(args.file)
    concept = Concept.parse(args.concept)
    pi = Partition.parse(args.partition, game.n)
    verdict = check(game.profile, pi, concept, cap=max(game.n, 8))
    _emit(args, verdict.to_dict(), str(verdict))
    return EXIT_OK if verdict.stable else EXIT_FAIL


def cmd_survey(args) -> int:
    game = load_game(args.file)
    max_n = None
    if args.max_n_override:
        max_n = game.n
        print(f"override: {cost_estimate(game.n)}", file=sys.stderr)
    elif game.n > GROUP_SCAN_CAP:
        raise HedonicError(
            f"n={game.n} exceeds the survey cap of {GROUP_SCAN_CAP}; rerun with --max-n-override "
            f"({cost_estimate(game.n) if game.n <= 10 else 'very large'})"
        )
    report = survey(game.profile, game.name or Path(args.file).stem, max_n=max_n)
    _emit(args, report.to_dict(), report.table())
    return EXIT_OK if not report.hierarchy_violations else EXIT_FAIL


def cmd_examples(args) -> int:
    text = bundled_text(args.name)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hedonic", description="Stability tools for hedonic games.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=fn)
        return p

    p = add("check", cmd_check, "test preference restrictions")
    p.add_argument("file")
    p = add("solve", cmd_solve, "construct a stable partition")
    p.add_argument("--algorithm", "-a", choices=ALGORITHMS, required=True)
    p.add_argument("file")
    p = add("verify", cmd_verify, "test one partition against one stability concept")
    p.add_argument("--concept", "-c", required=True)
    p.add_argument("--partition", "-p", required=True, help='e.g. "1,2|3,4"')
    p.add_argument("file")
    p = add("survey", cmd_survey, "enumerate stable partitions for every concept")
    p.add_argument("--max-n-override", action="store_true", help="lift the player caps")
    p.add_argument("file")
    p = add("examples", cmd_examples, "write a bundled game file")
    p.add_argument("--name", required=True, choices=("example1", "example2", "prop2", "prop3"))
    p.add_argument("--out")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (HedonicError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
