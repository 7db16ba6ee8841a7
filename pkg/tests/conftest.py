"""Shared fixtures: worked examples and the randomized corpus.

The corpus backs several cross-validation tests, so it is built once
per session: every building set on up to four elements, plus 500
seeded random ones on five and six.
"""

from __future__ import annotations

from random import Random

import pytest

from weakfano import (
    BuildingSet,
    Digraph,
    enumerate_building_sets,
    random_building_set,
    validate_building_set,
)

CORPUS_SEED = 20260819


def bset(ground_size: int, *extras) -> BuildingSet:
    family = [(i,) for i in range(1, ground_size + 1)] + [tuple(e) for e in extras]
    return validate_building_set(ground_size, family)


@pytest.fixture(scope="session")
def failing_pair_set() -> BuildingSet:
    """Singletons plus two overlapping 4-sets; the smallest worked
    example of a non weak Fano building set."""
    return bset(5, (1, 2, 3, 4), (2, 3, 4, 5), (1, 2, 3, 4, 5))


@pytest.fixture(scope="session")
def descent_one() -> BuildingSet:
    return bset(
        6,
        (1, 2, 3, 4), (2, 3, 4, 5), (3, 4, 5, 6),
        (1, 2, 3, 4, 5), (2, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6),
    )


@pytest.fixture(scope="session")
def descent_two() -> BuildingSet:
    return bset(
        7,
        (2, 4, 6), (2, 3, 4, 5), (1, 2, 3, 4, 5), (2, 3, 4, 5, 6),
        (3, 4, 5, 6, 7), (1, 2, 3, 4, 5, 6), (2, 3, 4, 5, 6, 7),
        (1, 2, 3, 4, 5, 6, 7),
    )


@pytest.fixture(scope="session")
def descent_three() -> BuildingSet:
    return bset(
        7,
        (2, 6), (4, 5, 6), (2, 4, 5, 6), (1, 2, 3, 4, 5), (2, 3, 4, 5, 6),
        (3, 4, 5, 6, 7), (1, 2, 3, 4, 5, 6), (2, 3, 4, 5, 6, 7),
        (1, 2, 3, 4, 5, 6, 7),
    )


@pytest.fixture(scope="session")
def cycle_digraph() -> Digraph:
    """Four nodes, a directed triangle plus a two-step chord."""
    return Digraph(4, ((1, 2), (2, 3), (3, 1), (1, 4), (4, 3)))


@pytest.fixture(scope="session")
def exhaustive_small() -> list[BuildingSet]:
    out: list[BuildingSet] = []
    for k in range(1, 5):
        out.extend(enumerate_building_sets(k))
    return out


@pytest.fixture(scope="session")
def random_corpus() -> list[BuildingSet]:
    rng = Random(CORPUS_SEED)
    out = [random_building_set(5, rng) for _ in range(300)]
    out += [random_building_set(6, rng) for _ in range(200)]
    return out


@pytest.fixture(scope="session")
def corpus(exhaustive_small, random_corpus) -> list[BuildingSet]:
    return exhaustive_small + random_corpus
