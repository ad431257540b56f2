import pytest

from matula import PrimeOracle


@pytest.fixture(scope="session")
def oracle():
    """One default-bound oracle shared across the session; extensions are
    monotone, so sharing only saves re-sieving."""
    return PrimeOracle()
