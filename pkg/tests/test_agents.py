"""Selection heuristics, episode runner, batch harness."""

import csv

import pytest

from helpers import F, clause, lit
from satenv.agents import (
    AgentSpec,
    batch_test,
    format_summary_table,
    run_episode,
    select_age,
    select_size,
    select_size_and_age,
    summarize,
    write_csv,
)
from satenv.env import EnvConfig, Observation, SaturationEnv
from satenv.errors import NoUnprocessed


def obs_of(*clauses_):
    return Observation(list(clauses_), step_number=0)


def c(nlits, processed=False, label="c"):
    lits = tuple(lit(f"p{i}", F("a")) for i in range(nlits))
    return clause(*lits, label=label, processed=processed)


class TestSelectSize:
    def test_fewest_literals(self):
        observation = obs_of(c(3, processed=True), c(1), c(2))
        assert select_size(observation) == 1

    def test_tie_breaks_to_lowest_index(self):
        observation = obs_of(c(2), c(2), c(2))
        assert select_size(observation) == 0

    def test_socrates_initial_table(self, socrates):
        # lengths are 2, 1, 1; the two unit clauses tie and the lower
        # index wins, which is the fact clause at index 1
        env = SaturationEnv(EnvConfig(problem_list=(socrates,), step_limit=10))
        observation = env.reset()
        assert [len(k.literals) for k in observation.clauses] == [2, 1, 1]
        assert select_size(observation) == 1

    def test_no_unprocessed(self):
        with pytest.raises(NoUnprocessed):
            select_size(obs_of(c(1, processed=True)))

    def test_globally_minimal(self):
        observation = obs_of(c(5), c(4), c(2, processed=True), c(3), c(4))
        chosen = select_size(observation)
        unprocessed = [i for i, k in enumerate(observation.clauses) if not k.processed]
        best = min(len(observation.clauses[i].literals) for i in unprocessed)
        assert len(observation.clauses[chosen].literals) == best


class TestSelectAge:
    def test_fresh_table(self):
        assert select_age(obs_of(c(1), c(1), c(1))) == 0

    def test_after_processing_first(self):
        assert select_age(obs_of(c(1, processed=True), c(1), c(1))) == 1

    def test_interleaved(self):
        observation = obs_of(c(1, processed=True), c(2), c(1, processed=True), c(1))
        assert select_age(observation) == 1

    def test_no_unprocessed(self):
        with pytest.raises(NoUnprocessed):
            select_age(obs_of())


class TestSelectSizeAndAge:
    def test_streak_phases(self):
        observation = obs_of(c(3), c(1))
        for step in range(5):
            assert select_size_and_age(observation, step, 5) == 1  # size picks
        assert select_size_and_age(observation, 5, 5) == 0  # age pick

    def test_strict_alternation(self):
        observation = obs_of(c(3), c(1))
        choices = [select_size_and_age(observation, s, 1) for s in range(4)]
        assert choices == [1, 0, 1, 0]

    def test_single_candidate(self):
        observation = obs_of(c(4))
        for step in range(12):
            assert select_size_and_age(observation, step, 5) == 0

    def test_sixty_step_synthetic_trace(self):
        # index 1 is the size choice, index 0 the age choice
        observation = obs_of(c(3), c(1))
        trace = [select_size_and_age(observation, s, 5) for s in range(60)]
        for block in range(10):
            chunk = trace[block * 6:(block + 1) * 6]
            assert chunk == [1, 1, 1, 1, 1, 0]


class TestRunEpisode:
    def test_socrates_age_agent(self, socrates):
        config = EnvConfig(problem_list=(socrates,), step_limit=10)
        result = run_episode(config, socrates, AgentSpec("age"), time_limit=60)
        assert result.category == "proof_found"
        assert result.proof_length == 2
        assert result.steps_taken <= 10

    def test_step_limit_category(self, socrates):
        config = EnvConfig(problem_list=(socrates,), step_limit=1)
        result = run_episode(config, socrates, AgentSpec("age"), time_limit=60)
        assert result.category == "step_limit"

    def test_zero_time_limit(self, socrates):
        config = EnvConfig(problem_list=(socrates,), step_limit=10)
        result = run_episode(config, socrates, AgentSpec("age"), time_limit=0)
        assert result.category == "timeout"
        assert result.steps_taken == 0

    def test_parse_error_category(self, tmp_path):
        bad = tmp_path / "broken.p"
        bad.write_text("cnf(x, axiom, p(\n")
        config = EnvConfig(problem_list=(bad,), step_limit=10)
        result = run_episode(config, bad, AgentSpec("age"), time_limit=60)
        assert result.category == "parse_error"
        assert result.error

    def test_missing_file_category(self, tmp_path):
        missing = tmp_path / "nope.p"
        config = EnvConfig(problem_list=(missing,), step_limit=10)
        result = run_episode(config, missing, AgentSpec("age"), time_limit=60)
        assert result.category == "parse_error"

    def test_saturation_maps_to_step_limit(self, bundled):
        path = bundled("SAT/SAT001-1.p")
        config = EnvConfig(problem_list=(path,), step_limit=100)
        result = run_episode(config, path, AgentSpec("size"), time_limit=60)
        assert result.category == "step_limit"


class TestBatch:
    def test_category_counts_sum(self, suite_paths):
        results = batch_test(suite_paths, AgentSpec("size"), step_limit=200,
                             time_limit=60)
        counts = summarize(results)
        assert sum(counts.values()) == len(suite_paths)

    def test_parallelism_does_not_change_results(self, suite_paths):
        fast = [p for p in suite_paths if "FLD" not in str(p)]
        seq = batch_test(fast, AgentSpec("size"), parallelism=1, step_limit=200,
                         time_limit=120)
        par = batch_test(fast, AgentSpec("size"), parallelism=8, step_limit=200,
                         time_limit=120)
        assert [(r.problem, r.category, r.steps_taken, r.proof) for r in seq] == [
            (r.problem, r.category, r.steps_taken, r.proof) for r in par
        ]

    def test_csv_shape(self, tmp_path, socrates):
        results = batch_test([socrates], AgentSpec("age"), step_limit=10, time_limit=60)
        out = tmp_path / "results.csv"
        write_csv(results, out)
        with open(out, newline="") as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ["problem", "agent", "category", "steps", "proof_length",
                           "wall_time"]
        assert len(rows) == 2
        assert rows[1][1] == "age"
        assert rows[1][2] == "proof_found"

    def test_summary_table_shape(self):
        counts = {
            "size": {"proof_found": 9, "step_limit": 4, "out_of_memory": 1, "timeout": 1},
            "age": {"proof_found": 7, "step_limit": 6, "out_of_memory": 1, "timeout": 1},
        }
        table = format_summary_table(counts)
        lines = table.splitlines()
        assert lines[1].startswith("proof_found")
        assert lines[-1].startswith("total")
        assert "15" in lines[-1]

    def test_invalid_parallelism(self, socrates):
        with pytest.raises(ValueError):
            batch_test([socrates], AgentSpec("age"), parallelism=0)
