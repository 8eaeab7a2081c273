import random

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def brute_root(n: int, e: int) -> int:
    """Largest r with r**e <= n, by linear search. Only for small n."""
    r = 0
    while (r + 1) ** e <= n:
        r += 1
    return r


@pytest.fixture
def rng():
    return random.Random(20261015)
