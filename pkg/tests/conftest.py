"""Shared fixtures for the test suite."""

import random
from math import gcd

import pytest

from config import get_default_config
from persistence.registry import raw_rows
from services.lattice import HomologyClass


@pytest.fixture(autouse=True)
def default_config(mocker, monkeypatch):
    """Run every test against the built-in defaults, not the repo's config.json."""
    monkeypatch.delenv('TORUS_MONODROMY_FORMAT', raising=False)
    monkeypatch.delenv('CONFIG_FILE', raising=False)
    config = get_default_config()
    mocker.patch('config.settings._config', config)
    return config


@pytest.fixture
def rng():
    return random.Random(20261018)


@pytest.fixture(params=[row.row_id for row in raw_rows()], ids=lambda r: f"row{r}")
def row(request):
    return raw_rows()[request.param - 1]


def random_primitive(rng: random.Random, bound: int) -> HomologyClass:
    while True:
        p, q = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if gcd(p, q) == 1:
            return HomologyClass(p, q)
