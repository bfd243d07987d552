"""First-order terms, literals, clauses and substitutions.

Everything downstream (parsing, unification, the calculus, the
environment) is built on the four value types in this module.  All
values are immutable after construction except the ``processed`` flag
on :class:`Clause`, which is flipped exactly once by the environment
when the clause is selected as the given clause.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Mapping, Union

EQUALITY = "="

#: Generated-clause rule names, in the order the sweep tries them.
RULE_NAMES = ("resolution", "paramodulation", "factoring", "reflexivity_resolution")


@dataclass(frozen=True, slots=True)
class Variable:
    """A first-order variable.  Names start with an uppercase letter."""

    name: str


@dataclass(frozen=True, slots=True)
class Function:
    """A function application; a constant is a ``Function`` with no arguments."""

    name: str
    arguments: tuple["Term", ...] = ()


Term = Union[Variable, Function]


@dataclass(frozen=True, slots=True)
class Predicate:
    """An atomic formula.  Equality is the ordinary predicate named ``=``."""

    name: str
    arguments: tuple[Term, ...] = ()


@dataclass(frozen=True, slots=True)
class Literal:
    """A possibly negated atom."""

    negated: bool
    atom: Predicate

    def complement(self) -> "Literal":
        return Literal(not self.negated, self.atom)


@dataclass(slots=True)
class Clause:
    """A disjunction of literals plus bookkeeping for the episode table.

    Input clauses have no ``inference_rule`` and ``birth_step`` -1;
    generated clauses record the rule and the labels of their parents.
    The empty literal tuple is the contradiction (rendered ``$false``).
    """

    literals: tuple[Literal, ...]
    label: str = ""
    role: str = "axiom"
    inference_rule: str | None = None
    inference_parents: tuple[str, ...] = ()
    birth_step: int = -1
    processed: bool = False

    def __len__(self) -> int:
        return len(self.literals)

    @property
    def is_empty(self) -> bool:
        return not self.literals

    def copy(self) -> "Clause":
        return replace(self)


class Substitution:
    """A finite map from variable names to terms.

    Identity bindings are dropped on construction, so ``bool(s)`` is
    False exactly for the identity substitution.  MGUs produced by
    :mod:`satenv.unify` are idempotent: applying twice equals applying
    once.
    """

    __slots__ = ("_map",)

    def __init__(self, bindings: Mapping[str, Term] = ()):
        mapping = dict(bindings)
        self._map = {
            name: term
            for name, term in mapping.items()
            if not (isinstance(term, Variable) and term.name == name)
        }

    def get(self, name: str, default: Term | None = None) -> Term | None:
        return self._map.get(name, default)

    def items(self) -> Iterator[tuple[str, Term]]:
        return iter(self._map.items())

    def domain(self) -> set[str]:
        return set(self._map)

    def __contains__(self, name: str) -> bool:
        return name in self._map

    def __len__(self) -> int:
        return len(self._map)

    def __bool__(self) -> bool:
        return bool(self._map)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Substitution):
            return NotImplemented
        return self._map == other._map

    def __hash__(self) -> int:
        return hash(frozenset(self._map.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k} -> {v}" for k, v in sorted(self._map.items()))
        return f"Substitution({{{inner}}})"


EMPTY_SUBSTITUTION = Substitution()


def _apply_to_term(mapping: Mapping[str, Term], term: Term) -> Term:
    if isinstance(term, Variable):
        return mapping.get(term.name, term)
    if not term.arguments:
        return term
    new_args = tuple(_apply_to_term(mapping, arg) for arg in term.arguments)
    if all(a is b for a, b in zip(new_args, term.arguments)):
        return term
    return Function(term.name, new_args)


def apply_substitution(subst: Substitution, target):
    """Apply ``subst`` to a term, literal or clause, simultaneously.

    Bound variables are replaced by their images in one pass; terms
    inserted by the substitution are not re-substituted into.  Unbound
    variables pass through unchanged.
    """
    mapping = subst._map if isinstance(subst, Substitution) else dict(subst)
    if not mapping:
        return target
    if isinstance(target, (Variable, Function)):
        return _apply_to_term(mapping, target)
    if isinstance(target, Predicate):
        return Predicate(
            target.name,
            tuple(_apply_to_term(mapping, arg) for arg in target.arguments),
        )
    if isinstance(target, Literal):
        return Literal(target.negated, apply_substitution(subst, target.atom))
    if isinstance(target, Clause):
        return replace(
            target,
            literals=tuple(apply_substitution(subst, lit) for lit in target.literals),
        )
    raise TypeError(f"cannot apply substitution to {type(target).__name__}")


def _collect_variables(target, out: set[str]) -> None:
    if isinstance(target, Variable):
        out.add(target.name)
    elif isinstance(target, (Function, Predicate)):
        for arg in target.arguments:
            _collect_variables(arg, out)
    elif isinstance(target, Literal):
        _collect_variables(target.atom, out)
    elif isinstance(target, Clause):
        for lit in target.literals:
            _collect_variables(lit, out)
    else:
        raise TypeError(f"cannot collect variables of {type(target).__name__}")


def variables_of(target) -> set[str]:
    """The set of variable names occurring in a term, literal or clause."""
    out: set[str] = set()
    _collect_variables(target, out)
    return out


def occurs_in(name: str, term: Term) -> bool:
    if isinstance(term, Variable):
        return term.name == name
    return any(occurs_in(name, arg) for arg in term.arguments)


def term_depth(term: Term) -> int:
    """Depth of a term tree; variables and constants have depth 0."""
    if isinstance(term, Variable) or not term.arguments:
        return 0
    return 1 + max(term_depth(arg) for arg in term.arguments)


def term_size(term: Term) -> int:
    """Number of nodes in a term tree."""
    if isinstance(term, Variable):
        return 1
    return 1 + sum(term_size(arg) for arg in term.arguments)


def is_equality_literal(literal: Literal) -> bool:
    return literal.atom.name == EQUALITY and len(literal.atom.arguments) == 2


# --- canonical clause signatures -------------------------------------------
#
# Two clauses that are identical up to a consistent variable renaming and a
# permutation of their literals must get equal signatures; the environment
# uses them to suppress duplicate children.  Literals are first keyed by
# their shape with variables blanked out; groups of literals that tie on
# that key are permuted (bounded) and the lexicographically least rendering
# under first-occurrence variable numbering wins.

_MAX_TIE_ORDERINGS = 5040  # 7!; beyond this fall back to a fixed literal order


def _blank_term(term: Term) -> str:
    if isinstance(term, Variable):
        return "*"
    if not term.arguments:
        return term.name
    return term.name + "(" + ",".join(_blank_term(a) for a in term.arguments) + ")"


def _blank_literal(lit: Literal) -> str:
    sign = "~" if lit.negated else ""
    atom = lit.atom
    if not atom.arguments:
        return sign + atom.name
    return sign + atom.name + "(" + ",".join(_blank_term(a) for a in atom.arguments) + ")"


def _variable_positions(lit: Literal) -> list[tuple[tuple[int, ...], str]]:
    out: list[tuple[tuple[int, ...], str]] = []

    def walk(term: Term, path: tuple[int, ...]) -> None:
        if isinstance(term, Variable):
            out.append((path, term.name))
        else:
            for i, arg in enumerate(term.arguments):
                walk(arg, path + (i,))

    for i, arg in enumerate(lit.atom.arguments):
        walk(arg, (i,))
    return out


def _refined_keys(literals: tuple[Literal, ...]) -> list:
    """Rename-invariant literal keys: the blanked shape refined by how the
    literal's variables link to the rest of the clause.  Cuts tie groups
    down to genuine symmetries before the permutation search."""
    blanks = [_blank_literal(lit) for lit in literals]
    positions = [_variable_positions(lit) for lit in literals]
    occurrences: dict[str, list[tuple[str, tuple[int, ...]]]] = {}
    for blank, pos in zip(blanks, positions):
        for path, name in pos:
            occurrences.setdefault(name, []).append((blank, path))
    colors = {name: tuple(sorted(occ)) for name, occ in occurrences.items()}
    return [
        (blank, tuple(colors[name] for _, name in pos))
        for blank, pos in zip(blanks, positions)
    ]


def _render_canonical(literals: tuple[Literal, ...]) -> str:
    names: dict[str, str] = {}

    def rt(term: Term) -> str:
        if isinstance(term, Variable):
            return names.setdefault(term.name, f"V{len(names)}")
        if not term.arguments:
            return term.name
        return term.name + "(" + ",".join(rt(a) for a in term.arguments) + ")"

    parts = []
    for lit in literals:
        sign = "~" if lit.negated else ""
        atom = lit.atom
        if atom.arguments:
            parts.append(sign + atom.name + "(" + ",".join(rt(a) for a in atom.arguments) + ")")
        else:
            parts.append(sign + atom.name)
    return "|".join(parts)


@lru_cache(maxsize=1 << 16)
def _signature_of_literals(literals: tuple[Literal, ...]) -> str:
    if not literals:
        return ""
    keys = _refined_keys(literals)
    keyed = sorted(range(len(literals)), key=lambda i: keys[i])
    groups: list[list[int]] = []
    for idx in keyed:
        if groups and keys[groups[-1][0]] == keys[idx]:
            groups[-1].append(idx)
        else:
            groups.append([idx])
    total = 1
    for g in groups:
        for k in range(2, len(g) + 1):
            total *= k
        if total > _MAX_TIE_ORDERINGS:
            break
    if total > _MAX_TIE_ORDERINGS:
        order = tuple(idx for g in groups for idx in g)
        return _render_canonical(tuple(literals[i] for i in order))
    best: str | None = None
    for combo in product(*(permutations(g) for g in groups)):
        order = tuple(idx for g in combo for idx in g)
        sig = _render_canonical(tuple(literals[i] for i in order))
        if best is None or sig < best:
            best = sig
    return best  # type: ignore[return-value]


def normalized_signature(clause: Clause) -> str:
    """Canonical text equal for clauses that are variants of each other.

    Invariant under any permutation of literals and any bijective
    variable renaming; deterministic across runs.
    """
    return _signature_of_literals(clause.literals)
