"""Small builders and fuzzers shared by the test modules."""

from __future__ import annotations

import random

from satenv.logic import Clause, Function, Literal, Predicate, Term, Variable


def V(name: str) -> Variable:
    return Variable(name)


def F(name: str, *args: Term) -> Function:
    return Function(name, tuple(args))


def lit(name: str, *args: Term, neg: bool = False) -> Literal:
    return Literal(neg, Predicate(name, tuple(args)))


def eq(left: Term, right: Term, neg: bool = False) -> Literal:
    return Literal(neg, Predicate("=", (left, right)))


def clause(*literals: Literal, label: str = "c", role: str = "axiom", **kw) -> Clause:
    return Clause(literals=tuple(literals), label=label, role=role, **kw)


def same_syntax(a: Clause, b: Clause) -> bool:
    """Equality on the fields a TPTP round trip preserves."""
    return (
        a.literals == b.literals
        and a.label == b.label
        and a.role == b.role
        and a.inference_rule == b.inference_rule
        and a.inference_parents == b.inference_parents
    )


# --- random structure generators ---------------------------------------------

_CONSTANTS = ("a", "b", "c")
_FUNCTIONS = (("f", 1), ("h", 2))
_VARIABLES = ("X", "Y", "Z")
_PREDICATES = (("p", 1), ("q", 2), ("r", 0), ("=", 2))


def random_term(rng: random.Random, depth: int = 2, ground: bool = False) -> Term:
    choices = ["const"]
    if depth > 0:
        choices.append("func")
    if not ground:
        choices.append("var")
    kind = rng.choice(choices)
    if kind == "var":
        return Variable(rng.choice(_VARIABLES))
    if kind == "const":
        return Function(rng.choice(_CONSTANTS))
    name, arity = rng.choice(_FUNCTIONS)
    return Function(name, tuple(random_term(rng, depth - 1, ground) for _ in range(arity)))


def random_literal(rng: random.Random, ground: bool = False) -> Literal:
    name, arity = rng.choice(_PREDICATES)
    args = tuple(random_term(rng, 1, ground) for _ in range(arity))
    return Literal(rng.random() < 0.5, Predicate(name, args))


def random_clause(rng: random.Random, max_literals: int = 3, ground: bool = False,
                  label: str = "c") -> Clause:
    n = rng.randint(0, max_literals)
    return Clause(
        literals=tuple(random_literal(rng, ground) for _ in range(n)),
        label=label,
    )
