"""Most-general unification with occurs check, and variant renaming."""

from __future__ import annotations

from dataclasses import replace

from .logic import (
    Clause,
    Predicate,
    Substitution,
    Term,
    Variable,
    apply_substitution,
    occurs_in,
)


def _compose_binding(subst: dict[str, Term], name: str, term: Term) -> None:
    # term is fully resolved under subst and has passed the occurs check,
    # so composing keeps the substitution idempotent.
    one = {name: term}
    for key in list(subst):
        image = apply_substitution(Substitution(one), subst[key])
        if isinstance(image, Variable) and image.name == key:
            del subst[key]
        else:
            subst[key] = image
    subst[name] = term


def mgu(left, right) -> Substitution | None:
    """Most general unifier of two terms or two atoms, or None.

    Failure (symbol clash, arity mismatch, occurs check) is a normal
    outcome.  On success the result is idempotent, makes both sides
    syntactically equal, and every other unifier factors through it.
    Variable-variable pairs bind the lexicographically smaller name.
    """
    if isinstance(left, Predicate) or isinstance(right, Predicate):
        if not (isinstance(left, Predicate) and isinstance(right, Predicate)):
            raise TypeError("cannot unify a term with an atom")
        if left.name != right.name or len(left.arguments) != len(right.arguments):
            return None
        work = list(zip(left.arguments, right.arguments))[::-1]
    else:
        work = [(left, right)]

    subst: dict[str, Term] = {}
    while work:
        s, t = work.pop()
        s = apply_substitution(Substitution(subst), s)
        t = apply_substitution(Substitution(subst), t)
        if s == t:
            continue
        s_var = isinstance(s, Variable)
        t_var = isinstance(t, Variable)
        if s_var and t_var:
            small, large = sorted((s.name, t.name))
            _compose_binding(subst, small, Variable(large))
        elif s_var:
            if occurs_in(s.name, t):
                return None
            _compose_binding(subst, s.name, t)
        elif t_var:
            if occurs_in(t.name, s):
                return None
            _compose_binding(subst, t.name, s)
        else:
            if s.name != t.name or len(s.arguments) != len(t.arguments):
                return None
            work.extend(list(zip(s.arguments, t.arguments))[::-1])
    return Substitution(subst)


def _first_occurrence_order(clause: Clause) -> list[str]:
    seen: list[str] = []

    def walk(term: Term) -> None:
        if isinstance(term, Variable):
            if term.name not in seen:
                seen.append(term.name)
        else:
            for arg in term.arguments:
                walk(arg)

    for lit in clause.literals:
        for arg in lit.atom.arguments:
            walk(arg)
    return seen


def rename_apart(clause: Clause, reserved: set[str]) -> Clause:
    """A variant of ``clause`` whose variables avoid ``reserved``.

    Variables not in ``reserved`` are kept; colliding ones are renamed to
    the first free name in the scheme X0, X1, ...  Deterministic given
    its inputs.
    """
    order = _first_occurrence_order(clause)
    colliding = [name for name in order if name in reserved]
    if not colliding:
        return clause
    taken = set(reserved) | {name for name in order if name not in reserved}
    mapping: dict[str, Term] = {}
    counter = 0
    for name in colliding:
        while True:
            candidate = f"X{counter}"
            counter += 1
            if candidate not in taken:
                break
        taken.add(candidate)
        mapping[name] = Variable(candidate)
    return apply_substitution(Substitution(mapping), clause)
