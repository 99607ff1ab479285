import pytest

from clalg.fixtures import LINEAR_CLA, NONLINEAR_CLA, linear_candidate, nonlinear_candidate
from clalg.search import SearchConfig, run_search
from clalg.validator import seal


@pytest.fixture
def linear5_candidate():
    return linear_candidate()


@pytest.fixture
def linear5():
    return seal(linear_candidate())


@pytest.fixture
def nonlinear6():
    return nonlinear_candidate()


@pytest.fixture
def ex1_path(tmp_path):
    p = tmp_path / "linear5.cla"
    p.write_text(LINEAR_CLA, encoding="utf-8")
    return p


@pytest.fixture
def ex2_path(tmp_path):
    p = tmp_path / "nonlinear6.cla"
    p.write_text(NONLINEAR_CLA, encoding="utf-8")
    return p


@pytest.fixture(scope="session")
def census():
    """All CL-algebras up to isomorphism for sizes 2..5, keyed by size."""
    return {n: run_search(SearchConfig(size=n)).algebras for n in range(2, 6)}
