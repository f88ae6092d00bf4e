import pytest

from landau.arith import sieve_primes
from landau.gtable import landau_g


@pytest.fixture(scope="session")
def ctx_million():
    return sieve_primes(10**6)


@pytest.fixture(scope="session")
def ctx_small():
    return sieve_primes(10**4)


@pytest.fixture(scope="session")
def table_10k(ctx_small):
    return landau_g(ctx_small, 10**4)


@pytest.fixture(scope="session")
def champion_sweep(ctx_small):
    from landau.champions import build_champion

    return [build_champion(ctx_small, x) for x in ctx_small.primes if 5 <= x <= 199]
