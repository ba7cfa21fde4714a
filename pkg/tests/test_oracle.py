"""The Cayley-graph database and its enumeration reports."""

from __future__ import annotations

import io

import pytest

from conftest import all_tangles

from brauer.errors import ParseError, ResourceLimit
from brauer.oracle import (
    bfs_cayley,
    check_assumption2,
    double_factorial_odd,
    dump_database,
    length_table,
    load_database,
    max_merges,
)
from brauer.tangle import (
    compose_word,
    format_word,
    identity,
    parse_tangle,
    t_prime,
    total_crossings,
    u_prime,
)

TABLE_LENGTHS = {
    1: {0: 1},
    2: {0: 1, 1: 2},
    3: {0: 1, 1: 4, 2: 8, 3: 2},
    4: {0: 1, 1: 6, 2: 20, 3: 36, 4: 30, 5: 10, 6: 2},
    5: {0: 1, 1: 8, 2: 36, 3: 102, 4: 196, 5: 228, 6: 212, 7: 106, 8: 42, 9: 12, 10: 2},
    6: {
        0: 1, 1: 10, 2: 56, 3: 208, 4: 562, 5: 1110, 6: 1650, 7: 1966,
        8: 1914, 9: 1440, 10: 830, 11: 414, 12: 162, 13: 56, 14: 14, 15: 2,
    },
}

TABLE_MAX_MERGES = {2: (1, 1), 3: (1, 6), 4: (2, 2), 5: (2, 46), 6: (3, 18)}


class TestBfs:
    def test_b2_entries(self, db):
        d = db[2]
        assert len(d) == 3
        assert d.length(identity(2)) == 0
        assert d.length(t_prime(2, 1)) == 1
        assert d.length(u_prime(2, 1)) == 1
        assert format_word(d.word(u_prime(2, 1))) == "U1"
        assert format_word(d.word(t_prime(2, 1))) == "T1"

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_complete_and_correct(self, n, db):
        d = db[n]
        assert len(d) == double_factorial_odd(n)
        # Same tangle set as the independent matching enumerator.
        assert {x.pairing for x in all_tangles(n)} == set(d.entries)
        for x, entry in d.items():
            w = d.word(x)
            assert len(w) == entry.length
            assert compose_word(w) == x
            assert w.t_count() == entry.t_count

    def test_b5_count(self, db):
        assert len(db[5]) == 945

    def test_example_b3_lookup(self, db):
        assert db[3].length(parse_tangle("B3: (1,3) (2,1') (2',3')")) == 2

    def test_resource_limit(self):
        with pytest.raises(ResourceLimit):
            bfs_cayley(4, max_entries=50)

    def test_max_length_attained_twice(self, db):
        for n in (3, 4, 5, 6):
            table = length_table(db[n])
            assert max(table) == n * (n - 1) // 2
            assert table[max(table)] == 2

    def test_jobs_byte_identical(self, db):
        serial = io.StringIO()
        dump_database(db[4], serial)
        parallel = io.StringIO()
        dump_database(bfs_cayley(4, jobs=2), parallel)
        assert serial.getvalue() == parallel.getvalue()

    @pytest.mark.slow
    def test_stored_words_n6(self, db):
        for x, entry in db[6].items():
            w = db[6].word(x)
            assert len(w) == entry.length
            assert compose_word(w) == x
            assert w.t_count() == entry.t_count


class TestLengthTable:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_published_values(self, n, db):
        assert length_table(db[n]) == TABLE_LENGTHS[n]


class TestMaxMerges:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_published_values(self, n, db):
        assert max_merges(db[n]) == TABLE_MAX_MERGES[n]

    @pytest.mark.slow
    def test_published_value_n7(self):
        from brauer.oracle import cached_database

        assert max_merges(cached_database(7)) == (3, 900)


class TestAssumption2:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_no_counterexamples(self, n, db):
        report = check_assumption2(db[n])
        assert report.tested == double_factorial_odd(n)
        assert report.counterexamples == ()

    @pytest.mark.slow
    def test_no_counterexamples_n7(self):
        from brauer.oracle import cached_database

        report = check_assumption2(cached_database(7))
        assert report.tested == 135135
        assert report.counterexamples == ()

    def test_t_count_equals_crossings_b4(self, db):
        for x, entry in db[4].items():
            assert entry.t_count == total_crossings(x)


class TestPersistence:
    def test_roundtrip(self, db):
        buf = io.StringIO()
        dump_database(db[3], buf)
        buf.seek(0)
        loaded = load_database(buf)
        assert loaded.n == 3
        assert loaded.entries == db[3].entries

    def test_dump_is_sorted_and_stable(self, db):
        buf1, buf2 = io.StringIO(), io.StringIO()
        dump_database(db[3], buf1)
        dump_database(bfs_cayley(3), buf2)
        assert buf1.getvalue() == buf2.getvalue()
        lines = buf1.getvalue().splitlines()
        assert lines == sorted(lines)
        assert len(lines) == 15

    def test_load_rejects_garbage(self):
        with pytest.raises(ParseError):
            load_database(io.StringIO("not a database\n"))

    def test_b3_golden_dump(self, db):
        # Frozen byte-for-byte: word choices are part of the contract.
        golden = (
            "B3: (1,1') (2,2') (3,3')\t0\t\n"
            "B3: (1,1') (2,3') (3,2')\t1\tT2\n"
            "B3: (1,1') (2,3) (2',3')\t1\tU2\n"
            "B3: (1,2') (2,1') (3,3')\t1\tT1\n"
            "B3: (1,2') (2,3') (3,1')\t2\tT2 T1\n"
            "B3: (1,2') (2,3) (1',3')\t2\tU2 T1\n"
            "B3: (1,2) (3,1') (2',3')\t2\tU1 U2\n"
            "B3: (1,2) (3,2') (1',3')\t2\tU1 T2\n"
            "B3: (1,2) (3,3') (1',2')\t1\tU1\n"
            "B3: (1,3') (2,1') (3,2')\t2\tT1 T2\n"
            "B3: (1,3') (2,2') (3,1')\t3\tT1 T2 T1\n"
            "B3: (1,3') (2,3) (1',2')\t2\tU2 U1\n"
            "B3: (1,3) (2,1') (2',3')\t2\tT1 U2\n"
            "B3: (1,3) (2,2') (1',3')\t3\tT1 U2 T1\n"
            "B3: (1,3) (2,3') (1',2')\t2\tT2 U1\n"
        )
        buf = io.StringIO()
        dump_database(db[3], buf)
        assert buf.getvalue() == golden
