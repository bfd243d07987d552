"""Saturation prover environment with pluggable clause-selection agents."""

from .agents import (
    AgentSpec,
    EpisodeResult,
    batch_test,
    run_episode,
    select_age,
    select_size,
    select_size_and_age,
)
from .calculus import (
    TermPosition,
    all_children,
    factoring,
    paramodulation,
    reflexivity_resolution,
    resolution,
)
from .env import EnvConfig, Observation, SaturationEnv, StepResult
from .errors import (
    DecodeError,
    IncludeCycle,
    IncludeNotFound,
    InvalidAction,
    NoActiveEpisode,
    NoProof,
    NoUnprocessed,
    ParseError,
    UnsupportedFormula,
)
from .jsonio import from_json, to_json
from .logic import (
    Clause,
    Function,
    Literal,
    Predicate,
    Substitution,
    Term,
    Variable,
    apply_substitution,
    normalized_signature,
    variables_of,
)
from .tptp import ProblemSource, parse_clause_text, parse_problem, render_tptp
from .unify import mgu, rename_apart

__version__ = "0.1.0"

__all__ = [
    "AgentSpec",
    "Clause",
    "DecodeError",
    "EnvConfig",
    "EpisodeResult",
    "Function",
    "IncludeCycle",
    "IncludeNotFound",
    "InvalidAction",
    "Literal",
    "NoActiveEpisode",
    "NoProof",
    "NoUnprocessed",
    "Observation",
    "ParseError",
    "Predicate",
    "ProblemSource",
    "SaturationEnv",
    "StepResult",
    "Substitution",
    "Term",
    "TermPosition",
    "UnsupportedFormula",
    "Variable",
    "all_children",
    "apply_substitution",
    "batch_test",
    "factoring",
    "from_json",
    "mgu",
    "normalized_signature",
    "paramodulation",
    "parse_clause_text",
    "parse_problem",
    "reflexivity_resolution",
    "rename_apart",
    "render_tptp",
    "resolution",
    "run_episode",
    "select_age",
    "select_size",
    "select_size_and_age",
    "to_json",
    "variables_of",
]
