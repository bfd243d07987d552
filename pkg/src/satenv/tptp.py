"""TPTP CNF reading and TSTP-style writing.

The accepted subset is the CNF sublanguage used by clause-selection
problems: ``cnf(name, role, formula).`` entries, ``include('path').``
directives, ``%`` line comments, single-quoted atoms, ``$false``, and
infix ``=`` / ``!=`` (the latter parsed as a negated equality literal).
Rendering uses one canonical spacing so golden tests are byte-exact,
and every rendered clause re-parses to an equal clause.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import IncludeCycle, IncludeNotFound, ParseError, UnsupportedFormula
from .logic import Clause, Function, Literal, Predicate, Term, Variable

_UNSUPPORTED_KEYWORDS = ("fof", "tff", "thf", "tcf", "tpi")


@dataclass(frozen=True)
class ProblemSource:
    """A problem file plus the directories searched for include targets.

    When ``include_roots`` is empty the defaults are the problem file's
    own directory and its grandparent, which makes standard trees with
    ``Axioms/`` beside ``Problems/`` work without configuration.
    """

    path: Path
    include_roots: tuple[Path, ...] = ()

    def roots(self) -> tuple[Path, ...]:
        if self.include_roots:
            return self.include_roots
        base = Path(self.path).parent
        return (base, base / ".." / "..")


# --- tokenizer ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<comment>%[^\n]*)
    | (?P<lpar>\()
    | (?P<rpar>\))
    | (?P<lbracket>\[)
    | (?P<rbracket>\])
    | (?P<comma>,)
    | (?P<dot>\.)
    | (?P<pipe>\|)
    | (?P<neq>!=)
    | (?P<tilde>~)
    | (?P<eq>=)
    | (?P<dollar>\$[a-z][a-zA-Z0-9_]*)
    | (?P<upper>[A-Z][a-zA-Z0-9_]*)
    | (?P<lower>[a-z0-9_][a-zA-Z0-9_]*)
    | (?P<quoted>'(?:\\.|[^'\\])*')
    """,
    re.VERBOSE,
)


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str, filename: str | None):
    """Lazy token stream; lets the parser reject fof/tff entries by their
    keyword before running into syntax the CNF tokenizer does not know."""
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}",
                line, pos - line_start + 1, filename,
            )
        kind = match.lastgroup or ""
        value = match.group()
        if kind not in ("ws", "comment"):
            yield _Token(kind, value, line, pos - line_start + 1)
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rfind("\n") + 1
        pos = match.end()
    yield _Token("eof", "", line, pos - line_start + 1)


def _unquote(text: str) -> str:
    return re.sub(r"\\(.)", r"\1", text[1:-1])


_PLAIN_WORD = re.compile(r"[a-z0-9_][A-Za-z0-9_]*")


def _quote_if_needed(name: str) -> str:
    if _PLAIN_WORD.fullmatch(name):
        return name
    escaped = name.replace("\\", "\\\\").replace("'", "\\'")
    return f"'{escaped}'"


# --- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens, filename: str | None):
        self._stream = tokens
        self._buffer: list[_Token] = []
        self.filename = filename

    def peek(self) -> _Token:
        if not self._buffer:
            self._buffer.append(next(self._stream))
        return self._buffer[0]

    def advance(self) -> _Token:
        token = self.peek()
        self._buffer.pop(0)
        return token

    def fail(self, message: str, token: _Token | None = None):
        token = token or self.peek()
        raise ParseError(message, token.line, token.column, self.filename)

    def expect(self, kind: str, what: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            self.fail(f"expected {what}, found {token.text!r}", token)
        return self.advance()

    def atomic_word(self, what: str) -> str:
        token = self.peek()
        if token.kind == "lower":
            return self.advance().text
        if token.kind == "quoted":
            return _unquote(self.advance().text)
        self.fail(f"expected {what}, found {token.text!r}", token)
        raise AssertionError  # unreachable

    # entries ------------------------------------------------------------

    def entries(self):
        """Yield ('clause', Clause) and ('include', path) in file order."""
        while self.peek().kind != "eof":
            token = self.peek()
            if token.kind != "lower":
                self.fail(f"expected 'cnf' or 'include', found {token.text!r}")
            if token.text == "cnf":
                yield "clause", self.cnf_entry()
            elif token.text == "include":
                yield "include", self.include_entry()
            elif token.text in _UNSUPPORTED_KEYWORDS:
                raise UnsupportedFormula(
                    f"only cnf formulas are supported, found {token.text!r}",
                    token.line, token.column, self.filename,
                )
            else:
                self.fail(f"expected 'cnf' or 'include', found {token.text!r}")

    def include_entry(self) -> str:
        self.advance()  # include
        self.expect("lpar", "'('")
        target = self.expect("quoted", "quoted include path")
        self.expect("rpar", "')'")
        self.expect("dot", "'.'")
        return _unquote(target.text)

    def cnf_entry(self) -> Clause:
        self.advance()  # cnf
        self.expect("lpar", "'('")
        label = self.atomic_word("clause name")
        self.expect("comma", "','")
        role = self.atomic_word("clause role")
        self.expect("comma", "','")
        literals = self.formula()
        rule: str | None = None
        parents: tuple[str, ...] = ()
        if self.peek().kind == "comma":
            self.advance()
            rule, parents = self.inference()
        self.expect("rpar", "')'")
        self.expect("dot", "'.'")
        return Clause(
            literals=tuple(literals),
            label=label,
            role=role,
            inference_rule=rule,
            inference_parents=parents,
        )

    def inference(self) -> tuple[str, tuple[str, ...]]:
        token = self.peek()
        if token.kind != "lower" or token.text != "inference":
            self.fail(f"expected 'inference', found {token.text!r}", token)
        self.advance()
        self.expect("lpar", "'('")
        rule = self.atomic_word("rule name")
        self.expect("comma", "','")
        self.expect("lbracket", "'['")
        self.expect("rbracket", "']'")
        self.expect("comma", "','")
        self.expect("lbracket", "'['")
        parents: list[str] = []
        if self.peek().kind != "rbracket":
            parents.append(self.atomic_word("parent label"))
            while self.peek().kind == "comma":
                self.advance()
                parents.append(self.atomic_word("parent label"))
        self.expect("rbracket", "']'")
        self.expect("rpar", "')'")
        return rule, tuple(parents)

    # formulas -----------------------------------------------------------

    def formula(self) -> list[Literal]:
        if self.peek().kind == "lpar":
            self.advance()
            literals = self.disjunction()
            self.expect("rpar", "')'")
            return literals
        return self.disjunction()

    def disjunction(self) -> list[Literal]:
        literals = self.literal()
        while self.peek().kind == "pipe":
            self.advance()
            literals.extend(self.literal())
        return literals

    def literal(self) -> list[Literal]:
        negated = False
        if self.peek().kind == "tilde":
            self.advance()
            negated = True
        token = self.peek()
        if token.kind == "dollar":
            if token.text != "$false":
                self.fail(f"unsupported defined symbol {token.text!r}", token)
            if negated:
                self.fail("negated $false is not a clause literal", token)
            self.advance()
            return []  # a false disjunct contributes nothing
        left = self.term()
        if self.peek().kind in ("eq", "neq"):
            infix = self.advance()
            right = self.term()
            if infix.kind == "neq":
                negated = not negated
            return [Literal(negated, Predicate("=", (left, right)))]
        if isinstance(left, Variable):
            self.fail(f"a literal cannot be the bare variable {left.name!r}", token)
        return [Literal(negated, Predicate(left.name, left.arguments))]

    def term(self) -> Term:
        token = self.peek()
        if token.kind == "upper":
            self.advance()
            return Variable(token.text)
        name = self.atomic_word("term")
        if self.peek().kind != "lpar":
            return Function(name)
        self.advance()
        args = [self.term()]
        while self.peek().kind == "comma":
            self.advance()
            args.append(self.term())
        self.expect("rpar", "')'")
        return Function(name, tuple(args))


def _parse_text(text: str, filename: str | None) -> _Parser:
    return _Parser(_tokenize(text, filename), filename)


def parse_clause_text(text: str) -> Clause:
    """Parse exactly one annotated cnf formula."""
    parser = _parse_text(text, None)
    entries = list(parser.entries())
    if len(entries) != 1 or entries[0][0] != "clause":
        raise ParseError("expected exactly one cnf formula")
    return entries[0][1]


def parse_problem(source: ProblemSource | str | Path) -> list[Clause]:
    """Parse a problem file, expanding include directives in place.

    Clauses come back in file order; clauses of an included file appear
    at the directive's position.  Include cycles and unresolvable
    targets are errors.
    """
    if not isinstance(source, ProblemSource):
        source = ProblemSource(Path(source))
    roots = source.roots()
    clauses: list[Clause] = []
    active: list[Path] = []

    def load(path: Path) -> None:
        resolved = path.resolve()
        if resolved in active:
            raise IncludeCycle(f"include cycle through {resolved}", filename=str(path))
        active.append(resolved)
        text = path.read_text(encoding="utf-8")
        parser = _parse_text(text, str(path))
        for kind, value in parser.entries():
            if kind == "clause":
                clauses.append(value)
            else:
                load(_resolve_include(value, path))
        active.pop()

    def _resolve_include(target: str, from_path: Path) -> Path:
        candidate = Path(target)
        if candidate.is_absolute():
            if candidate.is_file():
                return candidate
        else:
            for root in roots:
                resolved = root / candidate
                if resolved.is_file():
                    return resolved
        raise IncludeNotFound(
            f"cannot resolve include {target!r} from {from_path}",
            filename=str(from_path),
        )

    load(Path(source.path))
    return clauses


# --- rendering ---------------------------------------------------------------


def render_term(term: Term) -> str:
    if isinstance(term, Variable):
        return term.name
    if not term.arguments:
        return _quote_if_needed(term.name)
    inner = ",".join(render_term(arg) for arg in term.arguments)
    return f"{_quote_if_needed(term.name)}({inner})"


def render_literal(literal: Literal) -> str:
    atom = literal.atom
    sign = "~" if literal.negated else ""
    if atom.name == "=" and len(atom.arguments) == 2:
        left, right = atom.arguments
        return f"{sign}{render_term(left)} = {render_term(right)}"
    if not atom.arguments:
        return sign + _quote_if_needed(atom.name)
    inner = ",".join(render_term(arg) for arg in atom.arguments)
    return f"{sign}{_quote_if_needed(atom.name)}({inner})"


def render_tptp(clause: Clause) -> str:
    """One canonical cnf line; generated clauses carry their inference."""
    if clause.literals:
        formula = " | ".join(render_literal(lit) for lit in clause.literals)
    else:
        formula = "$false"
    label = _quote_if_needed(clause.label)
    if clause.inference_rule is None:
        return f"cnf({label}, {clause.role}, {formula})."
    parents = ", ".join(_quote_if_needed(p) for p in clause.inference_parents)
    return (
        f"cnf({label}, {clause.role}, {formula}, "
        f"inference({clause.inference_rule}, [], [{parents}]))."
    )
