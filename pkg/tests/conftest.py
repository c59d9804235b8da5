import pytest

from fuzzycr.analysis import standard_sweep_results
from fuzzycr.catalog import standard_catalog


@pytest.fixture(scope="session")
def tri_catalog():
    return standard_catalog("triangular")


@pytest.fixture(scope="session")
def gauss_catalog():
    return standard_catalog("gaussian")


@pytest.fixture(scope="session")
def all_sweeps():
    return standard_sweep_results()
