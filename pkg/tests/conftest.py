import pytest

from satenv.problems import (
    ground_unsat_suite,
    mini_suite,
    problem_path,
    socrates_problem,
)


@pytest.fixture(scope="session")
def socrates():
    return socrates_problem()


@pytest.fixture(scope="session")
def suite_paths():
    return mini_suite()


@pytest.fixture(scope="session")
def ground_suite_paths():
    return ground_unsat_suite()


@pytest.fixture()
def bundled():
    return problem_path
