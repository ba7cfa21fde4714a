"""The compiled kernel and the pure twin must agree exactly."""

from __future__ import annotations

import random

import pytest

import brauer
from brauer._kernels import pure
from brauer.factorize import factor_indices
from brauer.tangle import random_tangle

speedups = pytest.importorskip(
    "brauer._kernels._speedups", reason="compiled kernel not built"
)


def test_backend_reported():
    assert brauer.backend() in ("cython", "pure")


def test_crossing_counts_agree():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randrange(0, 30)
        x = random_tangle(n, rng)
        assert pure.crossing_counts(n, list(x.pairing)) == speedups.crossing_counts(
            n, list(x.pairing)
        )


@pytest.mark.parametrize("min_t", [False, True])
def test_factorize_core_agrees(min_t):
    rng = random.Random(2 if min_t else 3)
    for _ in range(60):
        n = rng.randrange(1, 24)
        x = random_tangle(n, rng)
        indices = factor_indices(x)
        a = pure.factorize_core(n, list(x.pairing), indices, min_t, True)
        b = speedups.factorize_core(n, list(x.pairing), indices, min_t, True)
        assert a == b
