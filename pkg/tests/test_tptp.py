"""Parser and renderer tests, including byte-exact golden lines."""

import random

import pytest

from helpers import F, V, clause, eq, lit, random_clause, same_syntax
from satenv.errors import IncludeCycle, IncludeNotFound, ParseError, UnsupportedFormula
from satenv.logic import Clause, Predicate
from satenv.tptp import ProblemSource, parse_clause_text, parse_problem, render_tptp

SOCRATES_LINES = [
    "cnf(p_imp_q, hypothesis, ~man(X0) | mortal(X0)).",
    "cnf(p, hypothesis, man(socrates)).",
    "cnf(q, hypothesis, ~mortal(socrates)).",
]


class TestParseProblem:
    def test_socrates_file(self, socrates):
        clauses = parse_problem(socrates)
        assert [c.label for c in clauses] == ["p_imp_q", "p", "q"]
        assert [c.role for c in clauses] == ["hypothesis"] * 3
        assert [render_tptp(c) for c in clauses] == SOCRATES_LINES
        assert all(c.birth_step == -1 and c.inference_rule is None for c in clauses)

    def test_equality_clause(self):
        c = parse_clause_text("cnf(a2,hypothesis, ( ~ q(a) | f(X) = X )).")
        assert c.label == "a2"
        assert len(c.literals) == 2
        first, second = c.literals
        assert first == lit("q", F("a"), neg=True)
        assert not second.negated
        assert second.atom == Predicate("=", (F("f", V("X")), V("X")))

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.p"
        path.write_text("% nothing here\n")
        assert parse_problem(path) == []

    def test_include_expansion_order(self, tmp_path):
        (tmp_path / "Axioms").mkdir()
        (tmp_path / "Axioms" / "base.ax").write_text("cnf(ax, axiom, base).\n")
        problem = tmp_path / "Problems" / "TST"
        problem.mkdir(parents=True)
        target = problem / "test.p"
        target.write_text(
            "cnf(first, axiom, before).\n"
            "include('Axioms/base.ax').\n"
            "cnf(last, axiom, after).\n"
        )
        labels = [c.label for c in parse_problem(target)]
        assert labels == ["first", "ax", "last"]

    def test_include_cycle(self, tmp_path):
        one = tmp_path / "one.p"
        two = tmp_path / "two.p"
        one.write_text("include('two.p').\n")
        two.write_text("include('one.p').\n")
        with pytest.raises(IncludeCycle):
            parse_problem(ProblemSource(one, include_roots=(tmp_path,)))

    def test_include_not_found(self, tmp_path):
        path = tmp_path / "bad.p"
        path.write_text("include('Axioms/missing.ax').\n")
        with pytest.raises(IncludeNotFound):
            parse_problem(path)

    def test_unsupported_formula(self, tmp_path):
        path = tmp_path / "fof.p"
        path.write_text("fof(f1, axiom, ![X]: p(X)).\n")
        with pytest.raises(UnsupportedFormula):
            parse_problem(path)

    def test_bundled_include_problem(self, bundled):
        clauses = parse_problem(bundled("INC/INC001-1.p"))
        assert [c.label for c in clauses] == ["ax1", "ax2", "ax3", "base", "goal"]


class TestParseClauseText:
    def test_single_negated_literal(self):
        c = parse_clause_text("cnf(q, hypothesis, ~mortal(socrates)).")
        assert c.label == "q"
        assert c.literals == (lit("mortal", F("socrates"), neg=True),)

    def test_false_constant(self):
        c = parse_clause_text("cnf(e, axiom, $false).")
        assert c.literals == ()

    def test_malformed(self):
        with pytest.raises(ParseError):
            parse_clause_text("cnf(x, axiom, p(X | )")

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_clause_text("cnf(x, axiom,\n  p(X | )).")
        assert err.value.line == 2

    def test_inequality_sugar(self):
        c = parse_clause_text("cnf(d, axiom, a != b).")
        assert c.literals == (eq(F("a"), F("b"), neg=True),)

    def test_negated_infix_equality(self):
        c = parse_clause_text("cnf(d, axiom, ~ a = b).")
        assert c.literals == (eq(F("a"), F("b"), neg=True),)

    def test_quoted_atoms(self):
        c = parse_clause_text("cnf(s, axiom, p('hello world')).")
        assert c.literals == (lit("p", F("hello world")),)

    def test_bare_variable_literal_rejected(self):
        with pytest.raises(ParseError):
            parse_clause_text("cnf(x, axiom, X).")

    def test_two_formulas_rejected(self):
        with pytest.raises(ParseError):
            parse_clause_text("cnf(x, axiom, p). cnf(y, axiom, q).")


class TestRenderTptp:
    def test_input_clause(self):
        c = clause(lit("man", F("socrates")), label="p", role="hypothesis")
        assert render_tptp(c) == "cnf(p, hypothesis, man(socrates))."

    def test_generated_empty_clause(self):
        c = Clause(
            literals=(),
            label="_2",
            role="hypothesis",
            inference_rule="resolution",
            inference_parents=("q", "_0"),
        )
        assert render_tptp(c) == (
            "cnf(_2, hypothesis, $false, inference(resolution, [], [q, _0]))."
        )

    def test_negated_equality_round_trip(self):
        c = clause(eq(F("f", V("X")), V("X"), neg=True), label="d")
        text = render_tptp(c)
        assert same_syntax(parse_clause_text(text), c)

    def test_quoting_round_trip(self):
        c = clause(lit("p", F("odd name"), F("it's")), label="weird label")
        assert same_syntax(parse_clause_text(render_tptp(c)), c)

    def test_round_trip_random_clauses(self):
        rng = random.Random(11)
        for k in range(300):
            c = random_clause(rng, max_literals=4, label=f"c{k}")
            assert same_syntax(parse_clause_text(render_tptp(c)), c)

    def test_round_trip_inference_annotations(self):
        c = Clause(
            literals=(lit("p", V("X")),),
            label="_7",
            role="axiom",
            inference_rule="paramodulation",
            inference_parents=("a", "b"),
        )
        back = parse_clause_text(render_tptp(c))
        assert back.inference_rule == "paramodulation"
        assert back.inference_parents == ("a", "b")
