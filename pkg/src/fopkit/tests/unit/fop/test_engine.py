"""Unit tests for the first-occurrence process."""

import pytest

from fopkit.arith.factor import squarefree_core
from fopkit.exceptions import FamilyValidationError, InvalidInputError
from fopkit.fop.engine import DedupKey, SweepOrder, gap_stats, run_fop, run_fop_multi, sweep_raw
from fopkit.fop.families import TraceMap, radical_family, units_family
from fopkit.quadfield.numbers import fundamental_discriminant

# (M, t, r) of t^2 - 1 for t <= 15, sorted by M
T2M1_B15 = [
    (0, 1, 1),
    (2, 3, 2),
    (3, 2, 1),
    (5, 9, 4),
    (6, 5, 2),
    (7, 8, 3),
    (11, 10, 3),
    (14, 15, 4),
    (15, 4, 1),
    (30, 11, 2),
    (35, 6, 1),
    (42, 13, 2),
    (143, 12, 1),
    (195, 14, 1),
]


def _triples(run):
    return [(record.M, record.t, record.r) for record in run.records]


@pytest.mark.business_logic
class TestRunFop:
    """Tests for run_fop() on a single family."""

    def test_small_radical_list(self):
        """t^2 - 1 up to 15: first occurrences sorted by M."""
        # Act
        run = run_fop(radical_family("t2m1"), 15)

        # Assert
        assert _triples(run) == T2M1_B15
        assert run.stats.N == 14
        assert run.stats.sweep_size == 15
        assert run.stats.gap == 1
        assert run.stats.max_M == 195

    def test_degenerate_record_kept(self):
        """m(1) = 0 gives a flagged record [0, 1]."""
        run = run_fop(radical_family("t2m1"), 15)

        assert run.records[0].degenerate
        assert not any(record.degenerate for record in run.records[1:])

    def test_first_occurrence_is_minimal_t(self):
        """Each record's t is the smallest t reaching its radical."""
        family = units_family(-1)
        run = run_fop(family, 3000)
        first: dict[int, int] = {}
        for t, M in ((record.t, record.M) for record in sweep_raw([family], 3000)):
            first.setdefault(M, t)

        assert {record.M: record.t for record in run.records} == first

    def test_independent_of_workers_and_chunks(self):
        """Parallel chunked sweeps return the same records."""
        family = radical_family("t2m1")

        serial = run_fop(family, 3000, workers=1, chunk_size=3000)
        parallel = run_fop(family, 3000, workers=2, chunk_size=257)
        chunked = run_fop(family, 3000, workers=1, chunk_size=1)

        assert _triples(parallel) == _triples(serial)
        assert _triples(chunked) == _triples(serial)
        assert parallel.stats == serial.stats

    def test_non_sieve_path_agrees(self):
        """Prime traces go through direct factorization; records stay sorted and unique."""
        run = run_fop(units_family(-1, TraceMap(prime=True)), 300)
        keys = [record.key for record in run.records]

        assert keys == sorted(set(keys))
        for record in run.records:
            T = run.family_of(record).trace(record.t)
            assert T * T + 4 == record.M * record.r**2

    @pytest.mark.parametrize("B", [0, -5])
    def test_rejects_bad_bound(self, B: int):
        """B >= 1."""
        with pytest.raises(InvalidInputError):
            run_fop(radical_family("t2m1"), B)

    @pytest.mark.parametrize("families", [[], ["t2m1"]])
    def test_rejects_bad_families(self, families: list):
        """At least one radical family."""
        with pytest.raises(FamilyValidationError):
            run_fop_multi(families, 10)


@pytest.mark.business_logic
class TestRunFopMulti:
    """Tests for several families, sweep orders and the discriminant key."""

    def test_t_major_prefers_smaller_t(self):
        """M = 2 is met at t = 1 in t^2 + 1 before t = 3 in t^2 - 1."""
        run = run_fop_multi([radical_family("t2m1"), radical_family("t2p1")], 3, order=SweepOrder.T_MAJOR)
        record = next(r for r in run.records if r.M == 2)

        assert (record.t, record.family) == (1, 1)

    def test_family_major_prefers_first_family(self):
        """Family-major order runs t^2 - 1 over the whole range first."""
        run = run_fop_multi([radical_family("t2m1"), radical_family("t2p1")], 3, order="family_major")
        record = next(r for r in run.records if r.M == 2)

        assert (record.t, record.family) == (3, 0)
        assert run.family_of(record).name == "t^2-1"

    @pytest.mark.parametrize("chunk_size", [7, 250_000])
    def test_t_major_with_different_start(self, chunk_size: int):
        """t^2 - 4 starts at t = 3, t^2 - 1 at t = 1: families interleave by t, not by position."""
        families = [units_family(1), radical_family("t2m1")]
        expected: dict[int, tuple[int, int]] = {}
        for t in range(1, 201):
            for f, family in enumerate(families):
                if t not in family.points(200):
                    continue
                m = family.radicand(t)
                M = squarefree_core(m).M if m else 0
                expected.setdefault(M, (t, f))

        run = run_fop_multi(families, 200, chunk_size=chunk_size)

        assert {record.M: (record.t, record.family) for record in run.records} == expected
        assert (run.records[1].M, run.records[1].t, run.records[1].family) == (2, 3, 1)
        three = next(r for r in run.records if r.M == 3)
        assert (three.t, three.family) == (2, 1)

    def test_discriminant_prefix(self):
        """t^2 - 1 and t^2 + 1 together give every fundamental discriminant up to 28."""
        run = run_fop_multi([radical_family("t2m1"), radical_family("t2p1")], 100, DedupKey.DISCRIMINANT)

        assert [record.key for record in run.records[:9]] == [0, 5, 8, 12, 13, 17, 21, 24, 28]
        for record in run.records:
            if not record.degenerate:
                assert record.key == fundamental_discriminant(record.M)

    def test_nominal_size_counts_every_family(self):
        """The gap is measured against B per family."""
        run = run_fop_multi([radical_family("t2m1"), radical_family("t2p1")], 50)

        assert run.stats.nominal_size == 100
        assert run.stats.gap == 100 - run.stats.N


@pytest.mark.business_logic
class TestRawStreamAndGap:
    """Tests for sweep_raw() and gap_stats()."""

    def test_raw_stream_t2p4(self):
        """Undeduplicated radicals of t^2 + 4 in t order."""
        records = sweep_raw([radical_family("t2p4")], 12)

        assert [r.M for r in records] == [5, 2, 13, 5, 29, 10, 53, 17, 85, 26, 5, 37]

    @pytest.mark.parametrize(
        "order,expected",
        [("t_major", [0, 2, 3, 5, 2, 10]), ("family_major", [0, 3, 2, 2, 5, 10])],
    )
    def test_raw_stream_order(self, order: str, expected: list[int]):
        """Raw streams of two families follow the sweep order."""
        records = sweep_raw([radical_family("t2m1"), radical_family("t2p1")], 3, order)

        assert [r.M for r in records] == expected

    def test_raw_stream_interleaves_by_t(self):
        """t^2 - 4 joins the stream at t = 3."""
        records = sweep_raw([units_family(1), radical_family("t2m1")], 4)

        assert [(r.M, r.t, r.family) for r in records] == [(0, 1, 1), (3, 2, 1), (5, 3, 0), (2, 3, 1), (3, 4, 0), (15, 4, 1)]

    def test_gap_stats(self):
        """gap = B - N and its exponent."""
        stats = gap_stats(run_fop(radical_family("t2m1"), 15))

        assert (stats.N, stats.gap) == (14, 1)
        assert stats.exponent == 0.0

    def test_gap_exponent_none_without_gap(self):
        """No logarithm of a zero gap."""
        stats = gap_stats(run_fop(units_family(-1), 3))

        assert stats.gap == 0
        assert stats.exponent is None
