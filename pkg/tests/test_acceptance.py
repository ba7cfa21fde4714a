"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL
line (run with -s to watch them).  All comparisons are exact integer
matches except the runtime-slope guard of criterion 9.

The slow marker repeats criterion 4 exhaustively at N = 6.
"""

from __future__ import annotations

import math
import random
import time
from contextlib import contextmanager

import pytest

from brauer.factorize import factorize
from brauer.oracle import (
    check_assumption2,
    double_factorial_odd,
    length_table,
    max_merges,
)
from brauer.rewrite import check_assumption1
from brauer.symmetric import bubble_sort_factorize, inversion_count, to_permutation
from brauer.tangle import (
    compose_word,
    edge_crossings,
    format_word,
    parse_tangle,
    parse_word,
    random_tangle,
)
from brauer.tau import length_p, length_tau
from brauer.temperley_lieb import factorize_tl, is_planar

from test_oracle import TABLE_LENGTHS, TABLE_MAX_MERGES


@contextmanager
def criterion(number: int, name: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} ({name}): FAIL")
        raise
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE {number} ({name}): PASS [{elapsed:.2f}s]")


def test_criterion_1_cardinality(db):
    with criterion(1, "cardinality"):
        expected = {2: 3, 3: 15, 4: 105, 5: 945, 6: 10395}
        for n, count in expected.items():
            assert len(db[n]) == count == double_factorial_odd(n)


def test_criterion_2_length_spectrum(db):
    with criterion(2, "length spectrum"):
        for n in range(1, 7):
            assert length_table(db[n]) == TABLE_LENGTHS[n]
        assert TABLE_LENGTHS[4][3] == 36
        assert TABLE_LENGTHS[5][8] == 42
        assert TABLE_LENGTHS[6][10] == 830
        for n in range(3, 7):
            table = length_table(db[n])
            assert max(table) == n * (n - 1) // 2
            assert table[max(table)] == 2


def test_criterion_3_max_merges(db):
    with criterion(3, "max merges"):
        for n in range(2, 7):
            result = max_merges(db[n])
            assert result == TABLE_MAX_MERGES[n]
            assert result[0] == n // 2


def test_criterion_4_factorizer_minimality(db):
    with criterion(4, "factorizer minimality N<=5"):
        for n in range(1, 6):
            for x, entry in db[n].items():
                word = factorize(x)
                assert len(word) == entry.length
                assert compose_word(word) == x


@pytest.mark.slow
def test_criterion_4_slow_n6(db):
    with criterion(4, "factorizer minimality N=6"):
        for x, entry in db[6].items():
            word = factorize(x)
            assert len(word) == entry.length
            assert compose_word(word) == x


def test_criterion_5_length_agreement(db):
    with criterion(5, "length functions agree N<=6"):
        for n in range(1, 7):
            for x, entry in db[n].items():
                assert length_p(x) == length_tau(x) == entry.length


def test_criterion_6_assumption_2(db):
    with criterion(6, "assumption 2"):
        for n in range(1, 7):
            report = check_assumption2(db[n])
            assert report.tested == double_factorial_odd(n)
            assert len(report.counterexamples) == 0


def test_criterion_7_assumption_1(db):
    with criterion(7, "assumption 1"):
        coverage = {2: 3, 3: 15, 4: 105}
        for n, total in coverage.items():
            report = check_assumption1(db[n], scale=2.0, patience=200_000, seed=2024)
            assert report.counterexamples == ()
            assert report.tested == total
            assert report.exhausted_samples == 0


def test_criterion_8_submonoids(db):
    with criterion(8, "submonoid factorizers"):
        for n in range(1, 6):
            for x, entry in db[n].items():
                if all(e.a.row != e.b.row for e in x.edges):
                    word = bubble_sort_factorize(x)
                    assert len(word) == inversion_count(to_permutation(x)) == entry.length
                    assert compose_word(word) == x
                if is_planar(x):
                    word = factorize_tl(x)
                    assert compose_word(word) == x
                    assert len(word) == entry.length
        cups_b6 = "U2 U5 U1 U3 U2 U4 U3"
        assert format_word(factorize_tl(compose_word(parse_word(cups_b6, 6)))) == cups_b6


def test_criterion_9_complexity_guard():
    with criterion(9, "complexity smoke test"):
        times: dict[int, float] = {}
        for n in (32, 64, 128):
            x = random_tangle(n, random.Random(n))
            best = math.inf
            for _ in range(3):
                start = time.perf_counter()
                word = factorize(x)
                best = min(best, time.perf_counter() - start)
            assert compose_word(word) == x
            times[n] = max(best, 1e-6)
        xs = [math.log(n) for n in times]
        ys = [math.log(t) for t in times.values()]
        k = len(xs)
        slope = (k * sum(a * b for a, b in zip(xs, ys)) - sum(xs) * sum(ys)) / (
            k * sum(a * a for a in xs) - sum(xs) ** 2
        )
        assert slope <= 4.6, f"runtime slope {slope:.2f} exceeds the quartic guard"
        # Incremental table vs full recomputation, checked every step.
        for n in (16, 32, 64):
            x = random_tangle(n, random.Random(1000 + n))
            word = factorize(x, debug_table=True)
            assert compose_word(word) == x


def test_criterion_10_worked_examples(db):
    with criterion(10, "worked examples"):
        ex_b3 = parse_tangle("B3: (1,3) (2,1') (2',3')")
        assert format_word(factorize(ex_b3)) == "T1 U2"

        ex_b4 = parse_tangle("B4: (1,3) (2,3') (4,1') (2',4')")
        per_edge = [edge_crossings(ex_b4, e) for e in ex_b4.edges]
        assert per_edge == [1, 3, 1, 1]

        ex5 = compose_word(parse_word("T1 U2 U3 T1 T2", 4))
        word = factorize(ex5)
        assert len(word) == 5
        assert compose_word(word) == ex5
        assert db[4].length(ex5) == 5
