"""The stepwise given-clause environment.

``reset`` loads one problem of the configured list into an append-only
clause table; every ``step`` consumes one clause-selection action: the
addressed clause becomes the given clause, all one-rule conclusions
pairing it with previously processed clauses are generated, and new
ones (by normalized signature) are appended.  The episode ends on
refutation, saturation, a table size breach, or the step limit.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from .calculus import all_children
from .errors import InvalidAction, NoActiveEpisode, NoProof, ParseError
from .jsonio import clause_to_obj, dumps
from .logic import Clause, normalized_signature
from .tptp import ProblemSource, parse_problem, render_tptp

OUTCOME_RUNNING = "running"
OUTCOME_PROOF_FOUND = "proof_found"
OUTCOME_STEP_LIMIT = "step_limit_reached"
OUTCOME_SATURATED = "saturated"
OUTCOME_CLAUSE_LIMIT = "clause_limit_reached"

DEFAULT_STEP_LIMIT = 1000
DEFAULT_MAX_CLAUSES = 100_000


@dataclass(frozen=True)
class EnvConfig:
    problem_list: tuple[ProblemSource | str | Path, ...]
    step_limit: int = DEFAULT_STEP_LIMIT
    max_clauses: int = DEFAULT_MAX_CLAUSES

    def __post_init__(self):
        if self.step_limit < 1:
            raise ValueError("step_limit must be >= 1")
        if self.max_clauses < 1:
            raise ValueError("max_clauses must be >= 1")
        object.__setattr__(self, "problem_list", tuple(self.problem_list))


@dataclass
class Observation:
    """A snapshot of the clause table after a step.

    Clause indices are stable across steps (the table is append-only);
    each clause's ``processed`` flag records whether it has been
    selected as the given clause so far.
    """

    clauses: list[Clause]
    step_number: int

    def to_obj(self) -> dict:
        return {
            "clauses": [clause_to_obj(c) for c in self.clauses],
            "step_number": self.step_number,
        }


@dataclass
class StepResult:
    observation: Observation
    reward: float
    done: bool
    info: dict

    def __iter__(self):
        # supports: observation, reward, done, info = env.step(action)
        yield self.observation
        yield self.reward
        yield self.done
        yield self.info

    def to_obj(self) -> dict:
        return {
            "observation": self.observation.to_obj(),
            "reward": self.reward,
            "done": self.done,
            "info": self.info,
        }


class SaturationEnv:
    """One sequential episode driver; distinct instances are independent."""

    def __init__(self, config: EnvConfig):
        self.config = config
        self._table: list[Clause] = []
        self._signatures: set[str] = set()
        self._by_label: dict[str, Clause] = {}
        self._step_number = 0
        self._generated = 0
        self._outcome = OUTCOME_RUNNING
        self._active = False

    # -- episode control --------------------------------------------------

    def reset(self, problem_index: int = 0) -> Observation:
        """Load a problem and return the initial observation."""
        if not 0 <= problem_index < len(self.config.problem_list):
            raise IndexError(f"problem_index {problem_index} out of range")
        source = self.config.problem_list[problem_index]
        inputs = parse_problem(source)
        if len(inputs) > self.config.max_clauses:
            raise ValueError("max_clauses is smaller than the input clause count")
        table: list[Clause] = []
        by_label: dict[str, Clause] = {}
        signatures: set[str] = set()
        for clause in inputs:
            if clause.label in by_label:
                raise ParseError(f"duplicate clause label {clause.label!r}")
            installed = replace(
                clause, inference_rule=None, inference_parents=(),
                birth_step=-1, processed=False,
            )
            table.append(installed)
            by_label[installed.label] = installed
            signatures.add(normalized_signature(installed))
        self._table = table
        self._by_label = by_label
        self._signatures = signatures
        self._step_number = 0
        self._generated = 0
        self._outcome = OUTCOME_RUNNING
        self._active = True
        return self._observation()

    def step(self, action: int) -> StepResult:
        """Select the clause at ``action`` as the given clause.

        Invalid actions (index out of range, clause already processed)
        raise without mutating any state.
        """
        self._require_active()
        if self._outcome != OUTCOME_RUNNING:
            raise InvalidAction("episode is done; call reset()")
        if not isinstance(action, int) or isinstance(action, bool):
            raise InvalidAction(f"action must be an integer, got {action!r}")
        if not 0 <= action < len(self._table):
            raise InvalidAction(f"action {action} out of range")
        given = self._table[action]
        if given.processed:
            raise InvalidAction(f"clause {action} ({given.label}) is already processed")

        processed_before = [c for c in self._table if c.processed]
        # replace the shell instead of mutating, so observations already
        # handed out keep the processed flags of their own step
        given = replace(given, processed=True)
        self._table[action] = given
        self._by_label[given.label] = given
        children = all_children(given, processed_before)
        appended = 0
        for child in children:
            signature = normalized_signature(child)
            if signature in self._signatures:
                continue
            # inputs may already use _k style labels; skip collided values
            while f"_{self._generated}" in self._by_label:
                self._generated += 1
            installed = replace(
                child,
                label=f"_{self._generated}",
                birth_step=self._step_number,
            )
            self._generated += 1
            self._table.append(installed)
            self._by_label[installed.label] = installed
            self._signatures.add(signature)
            appended += 1
        self._step_number += 1

        if any(c.is_empty for c in self._table):
            self._outcome = OUTCOME_PROOF_FOUND
        elif len(self._table) > self.config.max_clauses:
            self._outcome = OUTCOME_CLAUSE_LIMIT
        elif all(c.processed for c in self._table):
            self._outcome = OUTCOME_SATURATED
        elif self._step_number >= self.config.step_limit:
            self._outcome = OUTCOME_STEP_LIMIT
        else:
            self._outcome = OUTCOME_RUNNING

        done = self._outcome != OUTCOME_RUNNING
        reward = 1.0 if self._outcome == OUTCOME_PROOF_FOUND else 0.0
        info = {"outcome": self._outcome, "generated_count": appended}
        return StepResult(self._observation(), reward, done, info)

    # -- views --------------------------------------------------------------

    def render(self, mode: str = "human") -> str:
        """The clause table as TPTP lines ("human") or a JSON document ("json")."""
        self._require_active()
        if mode == "human":
            return "\n".join(render_tptp(c) for c in self._table)
        if mode == "json":
            return dumps(self._observation().to_obj())
        raise ValueError(f"unknown render mode {mode!r}")

    def tstp_proof(self) -> str:
        """The generated clauses in the ancestry of the first empty clause.

        Rendered in birth order with their inference annotations; input
        clauses are excluded.  Only meaningful after a refutation.
        """
        self._require_active()
        if self._outcome != OUTCOME_PROOF_FOUND:
            raise NoProof(f"no proof available (outcome: {self._outcome})")
        empty = next(c for c in self._table if c.is_empty)
        keep: set[str] = set()
        stack = [empty]
        while stack:
            clause = stack.pop()
            if clause.inference_rule is None or clause.label in keep:
                continue
            keep.add(clause.label)
            for parent in clause.inference_parents:
                stack.append(self._by_label[parent])
        lines = [render_tptp(c) for c in self._table if c.label in keep]
        return "\n".join(lines)

    @property
    def outcome(self) -> str:
        return self._outcome

    @property
    def step_number(self) -> int:
        return self._step_number

    def _observation(self) -> Observation:
        # table entries are never mutated (processed flips swap the shell),
        # so a shallow list copy is a faithful snapshot
        return Observation(list(self._table), self._step_number)

    def _require_active(self) -> None:
        if not self._active:
            raise NoActiveEpisode("no active episode")
