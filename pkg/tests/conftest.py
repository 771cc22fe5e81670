from __future__ import annotations

import random
from fractions import Fraction

import pytest

from cubespec import inverse_walsh, make_function, weight

DEFAULT_SEED = 20259


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed for the randomized property tests",
    )


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)


def random_function(rng, n, lo=-5, hi=5):
    """Random integer-valued function, guaranteed nonzero."""
    vals = [rng.randrange(lo, hi + 1) for _ in range(1 << n)]
    if not any(vals):
        vals[rng.randrange(len(vals))] = 1
    return make_function(n, vals)


def random_band_function(rng, n, i, j, max_terms=5):
    """Random rational combination of characters with weights in [i, j].

    Built straight from a coefficient table, so band membership is exact by
    construction and the spectrum is exactly the set of chosen weights.
    """
    masks = [u for u in range(1 << n) if i <= weight(u) <= j]
    chosen = rng.sample(masks, rng.randrange(1, min(len(masks), max_terms) + 1))
    table = [Fraction(0)] * (1 << n)
    for u in chosen:
        table[u] = Fraction(rng.choice([x for x in range(-6, 7) if x]), rng.randrange(1, 5))
    return inverse_walsh(make_function(n, table))
