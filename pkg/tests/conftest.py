import pytest
from hypothesis import settings

from ramsey_bounds.bounds import load_seeds, packaged_seed_path
from ramsey_bounds.engine import run_fixpoint
from ramsey_bounds.verify import exact_small_table

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def survey_path():
    return packaged_seed_path("survey.csv")


@pytest.fixture(scope="session")
def base_only_path():
    return packaged_seed_path("base_only.csv")


@pytest.fixture
def survey_table(survey_path):
    return load_seeds(survey_path)


@pytest.fixture(scope="session")
def table1(survey_path):
    """Survey-seeded fixpoint over 3 <= m <= 10, n <= 15."""
    return run_fixpoint(load_seeds(survey_path), 10, 15)


@pytest.fixture(scope="session")
def table2(survey_path):
    """Survey-seeded fixpoint over 3 <= m <= 6, n <= 23."""
    return run_fixpoint(load_seeds(survey_path), 6, 23)


@pytest.fixture
def exact_table():
    return exact_small_table()


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
