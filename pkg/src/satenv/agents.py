"""Baseline clause-selection agents and the batch testing harness.

Three heuristics: ``size`` always selects the shortest unprocessed
clause, ``age`` the unprocessed clause that entered the table first,
and ``size_and_age`` the shortest clause for a fixed streak of steps
and then once the oldest.  The harness runs one episode per problem,
classifies the outcome into the four result categories, and can fan
episodes out over worker processes.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .env import EnvConfig, Observation, SaturationEnv
from .errors import NoUnprocessed, ParseError
from .tptp import ProblemSource

AGENT_KINDS = ("size", "age", "size_and_age")

CATEGORY_PROOF = "proof_found"
CATEGORY_STEP_LIMIT = "step_limit"
CATEGORY_OOM = "out_of_memory"
CATEGORY_TIMEOUT = "timeout"
CATEGORY_PARSE_ERROR = "parse_error"

#: Category rows of the summary table, in display order.
SUMMARY_CATEGORIES = (CATEGORY_PROOF, CATEGORY_STEP_LIMIT, CATEGORY_OOM, CATEGORY_TIMEOUT)

DEFAULT_TIME_LIMIT = 300.0


@dataclass(frozen=True)
class AgentSpec:
    kind: str
    size_streak: int = 5

    def __post_init__(self):
        if self.kind not in AGENT_KINDS:
            raise ValueError(f"unknown agent kind {self.kind!r}")
        if self.size_streak < 1:
            raise ValueError("size_streak must be >= 1")


@dataclass
class EpisodeResult:
    problem: str
    agent: str
    category: str
    steps_taken: int
    proof_length: int | None = None
    wall_time: float = 0.0
    proof: str | None = None
    error: str | None = None


def _unprocessed_indices(observation: Observation) -> list[int]:
    return [i for i, c in enumerate(observation.clauses) if not c.processed]


def select_size(observation: Observation) -> int:
    """Index of the unprocessed clause with the fewest literals.

    Ties break toward the lowest index, i.e. toward the oldest clause.
    """
    candidates = _unprocessed_indices(observation)
    if not candidates:
        raise NoUnprocessed("no unprocessed clause to select")
    return min(candidates, key=lambda i: (len(observation.clauses[i].literals), i))


def select_age(observation: Observation) -> int:
    """Index of the unprocessed clause that entered the table first."""
    candidates = _unprocessed_indices(observation)
    if not candidates:
        raise NoUnprocessed("no unprocessed clause to select")
    return candidates[0]


def select_size_and_age(observation: Observation, step_count: int, size_streak: int = 5) -> int:
    """Shortest clause for ``size_streak`` steps in a row, then once the oldest."""
    if step_count % (size_streak + 1) < size_streak:
        return select_size(observation)
    return select_age(observation)


def select_action(agent: AgentSpec, observation: Observation, step_count: int) -> int:
    if agent.kind == "size":
        return select_size(observation)
    if agent.kind == "age":
        return select_age(observation)
    return select_size_and_age(observation, step_count, agent.size_streak)


_OUTCOME_TO_CATEGORY = {
    "proof_found": CATEGORY_PROOF,
    "step_limit_reached": CATEGORY_STEP_LIMIT,
    "saturated": CATEGORY_STEP_LIMIT,
    "clause_limit_reached": CATEGORY_OOM,
}


def run_episode(
    config: EnvConfig,
    problem: ProblemSource | str | Path,
    agent: AgentSpec,
    time_limit: float = DEFAULT_TIME_LIMIT,
) -> EpisodeResult:
    """Run one episode of ``agent`` on ``problem`` under a wall-clock budget.

    Outcomes map to the four result categories: a refutation is
    ``proof_found``; hitting the step limit or saturating is
    ``step_limit``; breaching the clause table cap is ``out_of_memory``;
    exceeding ``time_limit`` is ``timeout``.  Parse failures are
    recorded as a ``parse_error`` result rather than raised.
    """
    problem_name = str(problem.path if isinstance(problem, ProblemSource) else problem)
    episode_config = EnvConfig(
        problem_list=(problem,),
        step_limit=config.step_limit,
        max_clauses=config.max_clauses,
    )
    env = SaturationEnv(episode_config)
    start = time.perf_counter()
    try:
        observation = env.reset()
    except (ParseError, OSError) as exc:
        return EpisodeResult(
            problem=problem_name, agent=agent.kind, category=CATEGORY_PARSE_ERROR,
            steps_taken=0, wall_time=time.perf_counter() - start, error=str(exc),
        )
    steps = 0
    while True:
        if time.perf_counter() - start > time_limit:
            return EpisodeResult(
                problem=problem_name, agent=agent.kind, category=CATEGORY_TIMEOUT,
                steps_taken=steps, wall_time=time.perf_counter() - start,
            )
        if not _unprocessed_indices(observation):
            # nothing to select (e.g. an empty problem file): saturated
            return EpisodeResult(
                problem=problem_name, agent=agent.kind, category=CATEGORY_STEP_LIMIT,
                steps_taken=steps, wall_time=time.perf_counter() - start,
            )
        action = select_action(agent, observation, observation.step_number)
        observation, _reward, done, info = env.step(action)
        steps += 1
        if done:
            break
    wall = time.perf_counter() - start
    category = _OUTCOME_TO_CATEGORY[info["outcome"]]
    if category == CATEGORY_PROOF:
        proof = env.tstp_proof()
        proof_length = len(proof.splitlines()) if proof else 0
        return EpisodeResult(
            problem=problem_name, agent=agent.kind, category=category,
            steps_taken=steps, proof_length=proof_length, wall_time=wall, proof=proof,
        )
    return EpisodeResult(
        problem=problem_name, agent=agent.kind, category=category,
        steps_taken=steps, wall_time=wall,
    )


def _episode_task(args) -> EpisodeResult:
    step_limit, max_clauses, problem, agent, time_limit = args
    config = EnvConfig(problem_list=(problem,), step_limit=step_limit, max_clauses=max_clauses)
    return run_episode(config, problem, agent, time_limit)


def batch_test(
    problems,
    agent: AgentSpec,
    parallelism: int = 1,
    step_limit: int = 1000,
    time_limit: float = DEFAULT_TIME_LIMIT,
    max_clauses: int = 100_000,
) -> list[EpisodeResult]:
    """Run one episode per problem, optionally across worker processes.

    Results come back in problem order and, timeouts aside, do not
    depend on ``parallelism``: workers are full processes, each owning
    one environment instance.
    """
    if parallelism < 1:
        raise ValueError("parallelism must be >= 1")
    problems = list(problems)
    tasks = [(step_limit, max_clauses, str(p), agent, time_limit) for p in problems]
    if parallelism == 1 or len(problems) <= 1:
        return [_episode_task(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(_episode_task, tasks))


# --- reporting ---------------------------------------------------------------


def summarize(results: list[EpisodeResult]) -> dict[str, int]:
    """Category counts in summary order; parse_error only when present."""
    counts = {category: 0 for category in SUMMARY_CATEGORIES}
    for result in results:
        counts[result.category] = counts.get(result.category, 0) + 1
    return counts


def format_summary_table(counts_by_agent: dict[str, dict[str, int]]) -> str:
    """A category-by-agent count table with a total row."""
    agents = list(counts_by_agent)
    categories = list(SUMMARY_CATEGORIES)
    for counts in counts_by_agent.values():
        for category in counts:
            if category not in categories:
                categories.append(category)
    width = max(len(c) for c in categories + ["total"]) + 2
    cols = [max(len(a), 6) for a in agents]
    lines = ["".ljust(width) + "  ".join(a.rjust(w) for a, w in zip(agents, cols))]
    for category in categories:
        row = [str(counts_by_agent[a].get(category, 0)).rjust(w) for a, w in zip(agents, cols)]
        lines.append(category.ljust(width) + "  ".join(row))
    totals = [str(sum(counts_by_agent[a].values())).rjust(w) for a, w in zip(agents, cols)]
    lines.append("total".ljust(width) + "  ".join(totals))
    return "\n".join(lines)


CSV_FIELDS = ("problem", "agent", "category", "steps", "proof_length", "wall_time")


def write_csv(results: list[EpisodeResult], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_FIELDS)
        for r in results:
            writer.writerow([
                r.problem,
                r.agent,
                r.category,
                r.steps_taken,
                "" if r.proof_length is None else r.proof_length,
                f"{r.wall_time:.3f}",
            ])
