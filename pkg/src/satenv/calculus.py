"""The four-rule generating calculus and the child sweep.

Rules: binary resolution, paramodulation, factoring and reflexivity
resolution.  There is no simplification here by design: no tautology
deletion, no subsumption, no demodulation.  Each rule returns the
conclusion clause or None when it does not apply (sign or symbol
mismatch, failed unification, variable rewrite position); None is a
normal outcome, not a fault.

Conclusions carry the rule name and the parent labels; the environment
assigns fresh labels and birth steps when it installs them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .logic import (
    Clause,
    Function,
    Literal,
    Predicate,
    Term,
    Variable,
    apply_substitution,
    is_equality_literal,
    normalized_signature,
    variables_of,
)
from .unify import mgu, rename_apart

LEFT_TO_RIGHT = "left_to_right"
RIGHT_TO_LEFT = "right_to_left"


@dataclass(frozen=True, slots=True)
class TermPosition:
    """Address of a subterm: a literal index and an argument path.

    ``path`` descends from the atom's argument list into nested
    function arguments; it never addresses a variable occurrence
    (paramodulation does not rewrite at variable positions).
    """

    literal_index: int
    path: tuple[int, ...]


def subterm_at(clause: Clause, position: TermPosition) -> Term | None:
    """The addressed subterm, or None if the position does not exist."""
    if not 0 <= position.literal_index < len(clause.literals):
        return None
    if not position.path:
        return None
    node = clause.literals[position.literal_index].atom
    term: Term | None = None
    for index in position.path:
        if isinstance(node, Variable):
            return None
        args = node.arguments
        if not 0 <= index < len(args):
            return None
        term = args[index]
        node = term
    return term


def _replace_in_term(term: Term, path: tuple[int, ...], replacement: Term) -> Term:
    if not path:
        return replacement
    head, *rest = path
    args = list(term.arguments)  # type: ignore[union-attr]
    args[head] = _replace_in_term(args[head], tuple(rest), replacement)
    return Function(term.name, tuple(args))  # type: ignore[union-attr]


def _replace_in_literal(literal: Literal, path: tuple[int, ...], replacement: Term) -> Literal:
    head, *rest = path
    args = list(literal.atom.arguments)
    args[head] = _replace_in_term(args[head], tuple(rest), replacement)
    return Literal(literal.negated, Predicate(literal.atom.name, tuple(args)))


def term_positions(clause: Clause) -> list[TermPosition]:
    """All non-variable subterm positions, in literal then pre-order."""
    out: list[TermPosition] = []

    def walk(term: Term, literal_index: int, path: tuple[int, ...]) -> None:
        if isinstance(term, Variable):
            return
        out.append(TermPosition(literal_index, path))
        for i, arg in enumerate(term.arguments):
            walk(arg, literal_index, path + (i,))

    for li, lit in enumerate(clause.literals):
        for ai, arg in enumerate(lit.atom.arguments):
            walk(arg, li, (ai,))
    return out


def _conclusion(literals, rule: str, parents: tuple[str, ...], role: str) -> Clause:
    return Clause(
        literals=tuple(literals),
        label="",
        role=role,
        inference_rule=rule,
        inference_parents=parents,
    )


def resolution(c1: Clause, i: int, c2: Clause, j: int) -> Clause | None:
    """Resolve literal ``i`` of ``c1`` against literal ``j`` of ``c2``.

    Applies when the two literals have opposite signs (either
    orientation) and their atoms unify; the conclusion is the unifier
    applied to the remaining literals of ``c1`` then of ``c2``.
    Premises must be variable-disjoint; callers rename apart.
    """
    lit1, lit2 = c1.literals[i], c2.literals[j]
    if lit1.negated == lit2.negated:
        return None
    sigma = mgu(lit1.atom, lit2.atom)
    if sigma is None:
        return None
    rest = [lit for k, lit in enumerate(c1.literals) if k != i]
    rest.extend(lit for k, lit in enumerate(c2.literals) if k != j)
    return _conclusion(
        (apply_substitution(sigma, lit) for lit in rest),
        "resolution",
        (c1.label, c2.label),
        c1.role,
    )


def paramodulation(
    c1: Clause,
    eq_index: int,
    c2: Clause,
    position: TermPosition,
    orientation: str = LEFT_TO_RIGHT,
) -> Clause | None:
    """Rewrite the subterm of ``c2`` at ``position`` using an equality of ``c1``.

    Literal ``eq_index`` of ``c1`` must be a positive equality; with its
    sides ordered per ``orientation`` as s = t, the rule applies when s
    unifies with the addressed subterm r.  The conclusion is the unifier
    applied to the rewritten literal, the remaining literals of ``c2``,
    and the literals of ``c1`` minus the equality.  Rewriting at a
    variable position is not applicable.
    """
    eq_lit = c1.literals[eq_index]
    if eq_lit.negated or not is_equality_literal(eq_lit):
        return None
    s, t = eq_lit.atom.arguments
    if orientation == RIGHT_TO_LEFT:
        s, t = t, s
    elif orientation != LEFT_TO_RIGHT:
        raise ValueError(f"unknown orientation {orientation!r}")
    target = subterm_at(c2, position)
    if target is None or isinstance(target, Variable):
        return None
    sigma = mgu(s, target)
    if sigma is None:
        return None
    rewritten = _replace_in_literal(c2.literals[position.literal_index], position.path, t)
    rest = [rewritten]
    rest.extend(lit for k, lit in enumerate(c2.literals) if k != position.literal_index)
    rest.extend(lit for k, lit in enumerate(c1.literals) if k != eq_index)
    return _conclusion(
        (apply_substitution(sigma, lit) for lit in rest),
        "paramodulation",
        (c1.label, c2.label),
        c1.role,
    )


def factoring(c: Clause, i: int, j: int) -> Clause | None:
    """Merge literal ``j`` into literal ``i`` when their atoms unify.

    The literals must be distinct, carry the same sign, and unify; the
    conclusion is the unifier applied to the clause without literal
    ``j``.  Same-sign pairs of either polarity are eligible.
    """
    if i == j:
        raise ValueError("factoring needs two distinct literal indices")
    lit1, lit2 = c.literals[i], c.literals[j]
    if lit1.negated != lit2.negated:
        return None
    sigma = mgu(lit1.atom, lit2.atom)
    if sigma is None:
        return None
    rest = (lit for k, lit in enumerate(c.literals) if k != j)
    return _conclusion(
        (apply_substitution(sigma, lit) for lit in rest),
        "factoring",
        (c.label,),
        c.role,
    )


def reflexivity_resolution(c: Clause, i: int) -> Clause | None:
    """Drop a negated equality whose sides unify."""
    lit = c.literals[i]
    if not lit.negated or not is_equality_literal(lit):
        return None
    s, t = lit.atom.arguments
    sigma = mgu(s, t)
    if sigma is None:
        return None
    rest = (lit for k, lit in enumerate(c.literals) if k != i)
    return _conclusion(
        (apply_substitution(sigma, lit) for lit in rest),
        "reflexivity_resolution",
        (c.label,),
        c.role,
    )


def _positive_equality_indices(clause: Clause) -> list[int]:
    return [
        i
        for i, lit in enumerate(clause.literals)
        if not lit.negated and is_equality_literal(lit)
    ]


def all_children(given: Clause, processed: list[Clause]) -> list[Clause]:
    """Every one-rule conclusion with ``given`` as a premise.

    For each processed clause, both premise orders are tried (the
    processed clause as first premise comes first), with all literal
    pairs for resolution and all equality literals, target positions
    and equation orientations for paramodulation; factoring and
    reflexivity resolution run on ``given`` alone.  The second premise
    is renamed apart before each binary attempt.  The batch is
    deduplicated by normalized signature and its order is deterministic:
    processed list order, then premise order, then rule, then literal
    indices, then positions, then orientations.
    """
    children: list[Clause] = []
    seen: set[str] = set()

    def emit(child: Clause | None) -> None:
        if child is None:
            return
        signature = normalized_signature(child)
        if signature in seen:
            return
        seen.add(signature)
        children.append(child)

    for partner in processed:
        for c1, c2 in ((partner, given), (given, partner)):
            c2r = rename_apart(c2, variables_of(c1))
            c2_literals = c2r.literals
            for i, lit1 in enumerate(c1.literals):
                name1, arity1, neg1 = lit1.atom.name, len(lit1.atom.arguments), lit1.negated
                for j, lit2 in enumerate(c2_literals):
                    # cheap sign/symbol prefilter; resolution rechecks
                    if (
                        neg1 != lit2.negated
                        and name1 == lit2.atom.name
                        and arity1 == len(lit2.atom.arguments)
                    ):
                        emit(resolution(c1, i, c2r, j))
            eq_indices = _positive_equality_indices(c1)
            if eq_indices:
                positions = term_positions(c2r)
                for eq_index in eq_indices:
                    for position in positions:
                        for orientation in (LEFT_TO_RIGHT, RIGHT_TO_LEFT):
                            emit(paramodulation(c1, eq_index, c2r, position, orientation))
    for i in range(len(given.literals)):
        for j in range(len(given.literals)):
            if i != j:
                emit(factoring(given, i, j))
    for i in range(len(given.literals)):
        emit(reflexivity_resolution(given, i))
    return children
