from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hibiring import build_poset, figure_catalog, iter_random_posets


@pytest.fixture(scope="session")
def catalog():
    return figure_catalog()


@pytest.fixture(scope="session")
def fig(catalog):
    """Figure posets by short name: fig('fig5_butterfly')."""

    cache = {}

    def get(name: str):
        if name not in cache:
            cache[name] = catalog[name].to_poset()
        return cache[name]

    return get


@pytest.fixture(scope="session")
def random_corpus_7():
    """The seeded 1000-poset corpus shared by the classification suites."""
    return list(iter_random_posets(seed=20260810, count=1000, max_size=7))


@pytest.fixture(scope="session")
def v_poset():
    return build_poset(["bot", "top1", "top2"], [("bot", "top1"), ("bot", "top2")])


@pytest.fixture(scope="session")
def diamond():
    return build_poset(
        ["bot", "mid1", "mid2", "top"],
        [("bot", "mid1"), ("bot", "mid2"), ("mid1", "top"), ("mid2", "top")],
    )
