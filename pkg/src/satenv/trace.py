"""Print the canonical payload sequence of one in-process episode.

Used to check wire transparency: the lines written here must be
byte-identical to the payloads a protocol client receives for the same
problem and action sequence.  Emits the reset observation document,
one step-result document per step, and finally ``{"proof": ...}`` when
a refutation was found.
"""

from __future__ import annotations

import argparse
import sys

from .agents import AgentSpec, select_action
from .env import DEFAULT_MAX_CLAUSES, DEFAULT_STEP_LIMIT, EnvConfig, SaturationEnv
from .jsonio import dumps


def trace_lines(problem: str, agent: AgentSpec, step_limit: int,
                max_clauses: int = DEFAULT_MAX_CLAUSES) -> list[str]:
    config = EnvConfig(problem_list=(problem,), step_limit=step_limit,
                       max_clauses=max_clauses)
    env = SaturationEnv(config)
    observation = env.reset()
    lines = [dumps(observation.to_obj())]
    done = False
    while not done:
        action = select_action(agent, observation, observation.step_number)
        result = env.step(action)
        lines.append(dumps(result.to_obj()))
        observation, done = result.observation, result.done
    if result.info["outcome"] == "proof_found":
        lines.append(dumps({"proof": env.tstp_proof()}))
    return lines


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="satenv-trace")
    parser.add_argument("--problem", required=True)
    parser.add_argument("--agent", choices=("size", "age", "size-age"), default="age")
    parser.add_argument("--step-limit", type=int, default=DEFAULT_STEP_LIMIT)
    parser.add_argument("--max-clauses", type=int, default=DEFAULT_MAX_CLAUSES)
    args = parser.parse_args(argv)
    kind = {"size": "size", "age": "age", "size-age": "size_and_age"}[args.agent]
    for line in trace_lines(args.problem, AgentSpec(kind), args.step_limit, args.max_clauses):
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
