"""Shared helpers: an independent matching enumerator and database fixtures.

all_tangles enumerates perfect matchings directly (pair the first free
position with every other free position, recurse), so database-completeness
tests do not lean on the breadth-first search they are checking.
"""

from __future__ import annotations

from typing import Iterator

import pytest

from brauer.oracle import MinimalDatabase, cached_database
from brauer.tangle import Tangle


def all_pairings(m: int) -> Iterator[tuple[int, ...]]:
    pairing = [-1] * m

    def rec(free: list[int]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(pairing)
            return
        p = free[0]
        for k in range(1, len(free)):
            q = free[k]
            pairing[p], pairing[q] = q, p
            yield from rec(free[1:k] + free[k + 1 :])
        pairing[p] = -1

    yield from rec(list(range(m)))


def all_tangles(n: int) -> Iterator[Tangle]:
    for pairing in all_pairings(2 * n):
        yield Tangle(n, pairing)


@pytest.fixture(scope="session")
def db() -> dict[int, MinimalDatabase]:
    """Databases for B_1..B_6, built once per test session."""
    return {n: cached_database(n) for n in range(1, 7)}
