"""Command-line entry points: prove, batch, serve."""

from __future__ import annotations

import argparse
import glob
import sys
from pathlib import Path

from .agents import (
    AgentSpec,
    batch_test,
    format_summary_table,
    run_episode,
    summarize,
    write_csv,
    CATEGORY_PROOF,
    CATEGORY_PARSE_ERROR,
    DEFAULT_TIME_LIMIT,
)
from .env import DEFAULT_MAX_CLAUSES, DEFAULT_STEP_LIMIT, EnvConfig
from .errors import ParseError
from .protocol import serve_stdio

_AGENT_CHOICES = {"size": "size", "age": "age", "size-age": "size_and_age"}


def _add_common_limits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--step-limit", type=int, default=DEFAULT_STEP_LIMIT,
                        help="maximum selection steps per episode")
    parser.add_argument("--max-clauses", type=int, default=DEFAULT_MAX_CLAUSES,
                        help="clause table cap; breaching it ends the episode")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satenv",
        description="Saturation prover environment for clause-selection agents",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    prove = sub.add_parser("prove", help="run one episode and print the proof")
    prove.add_argument("--problem", required=True, help="TPTP CNF problem file")
    prove.add_argument("--agent", choices=sorted(_AGENT_CHOICES), default="age")
    prove.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT,
                       help="wall-clock budget in seconds")
    _add_common_limits(prove)

    batch = sub.add_parser("batch", help="run a problem set and write CSV + figure")
    batch.add_argument("--problem", action="append", default=[],
                       help="problem path or glob; repeatable")
    batch.add_argument("--list", dest="list_file",
                       help="file with one problem path per line")
    batch.add_argument("--agent", action="append", choices=sorted(_AGENT_CHOICES),
                       default=[], help="agent to test; repeatable, default all three")
    batch.add_argument("--parallelism", type=int, default=1)
    batch.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT)
    batch.add_argument("--out", required=True, help="CSV output path")
    batch.add_argument("--no-figure", action="store_true",
                       help="skip the outcome chart next to the CSV")
    _add_common_limits(batch)

    serve = sub.add_parser("serve", help="speak the JSON-lines protocol on stdio")
    serve.add_argument("--problem", action="append", default=[], required=False,
                       help="problem file; repeatable, addressed by reset's problem_index")
    _add_common_limits(serve)

    return parser


def _cmd_prove(args) -> int:
    agent = AgentSpec(_AGENT_CHOICES[args.agent])
    config = EnvConfig(problem_list=(args.problem,), step_limit=args.step_limit,
                       max_clauses=args.max_clauses)
    result = run_episode(config, args.problem, agent, time_limit=args.time_limit)
    if result.category == CATEGORY_PROOF:
        print(result.proof)
        return 0
    if result.category == CATEGORY_PARSE_ERROR:
        print(result.error, file=sys.stderr)
        return 2
    print(result.category, file=sys.stderr)
    return 1


def _expand_problems(args) -> list[str]:
    problems: list[str] = []
    for pattern in args.problem:
        matches = sorted(glob.glob(pattern, recursive=True))
        problems.extend(matches if matches else [pattern])
    if args.list_file:
        for line in Path(args.list_file).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                problems.append(line)
    return problems


def _cmd_batch(args) -> int:
    problems = _expand_problems(args)
    agents = args.agent or sorted(_AGENT_CHOICES)
    all_results = []
    counts_by_agent: dict[str, dict[str, int]] = {}
    for name in agents:
        agent = AgentSpec(_AGENT_CHOICES[name])
        results = batch_test(
            problems, agent,
            parallelism=args.parallelism,
            step_limit=args.step_limit,
            time_limit=args.time_limit,
            max_clauses=args.max_clauses,
        )
        all_results.extend(results)
        counts = summarize(results)
        counts_by_agent[agent.kind] = counts
        print(format_summary_table({agent.kind: counts}))
        print()
    write_csv(all_results, args.out)
    if not args.no_figure:
        from .plots import save_category_chart

        figure_path = Path(args.out).with_suffix(".png")
        save_category_chart(counts_by_agent, figure_path)
        print(f"figure written to {figure_path}", file=sys.stderr)
    return 0


def _cmd_serve(args) -> int:
    config = EnvConfig(problem_list=tuple(args.problem), step_limit=args.step_limit,
                       max_clauses=args.max_clauses)
    return serve_stdio(config)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "prove":
            return _cmd_prove(args)
        if args.command == "batch":
            return _cmd_batch(args)
        return _cmd_serve(args)
    except (ParseError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
