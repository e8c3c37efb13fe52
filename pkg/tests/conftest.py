import pytest

from voacert import liesuper


@pytest.fixture(scope="session")
def psl_cache():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = liesuper.build_psl(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def sl_cache():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = liesuper.build_sl(n)
        return cache[n]

    return get
