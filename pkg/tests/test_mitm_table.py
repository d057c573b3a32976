"""Unit tests for the fingerprint table used by the meet-in-the-middle search."""

import random
from math import gcd

import pytest

from rsacf import (
    FingerprintTable,
    NotInvertibleError,
    fingerprint,
    fingerprint_width,
)

N = 104729 * 104723  # product of two primes, coprime to small bases


class TestFingerprint:
    def test_truncation(self):
        assert fingerprint(0xDEADBEEF, 16) == 0xBEEF
        assert fingerprint(0xDEADBEEF, 32) == 0xDEADBEEF

    def test_equal_inputs_equal_outputs(self):
        assert fingerprint(12345, 20) == fingerprint(12345, 20)

    def test_width_range_enforced(self):
        with pytest.raises(ValueError):
            fingerprint(1, 15)
        with pytest.raises(ValueError):
            fingerprint(1, 65)

    def test_width_formula(self):
        assert fingerprint_width(1024) == 28       # 2*10 + 8
        assert fingerprint_width(1 << 14) == 36
        assert fingerprint_width(2) == 16          # clamped low
        assert fingerprint_width(1 << 40) == 64    # clamped high
        assert fingerprint_width(4, 1024) == 28    # takes the max bound


class TestBuild:
    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            FingerprintTable.build(3, N, 0)
        with pytest.raises(ValueError):
            FingerprintTable.build(0, N, 4)
        with pytest.raises(ValueError):
            FingerprintTable.build(N, N, 4)

    def test_shared_factor_surfaces(self):
        with pytest.raises(NotInvertibleError) as exc_info:
            FingerprintTable.build(104729 * 2, N, 4)
        assert exc_info.value.gcd == 104729

    def test_build_cost_one_modmul_per_entry(self):
        table = FingerprintTable.build(3, N, 100)
        assert table.modmuls == 99
        assert table.entries == 100

    def test_nominal_bytes(self):
        table = FingerprintTable.build(3, N, 128, w=24)
        assert table.nominal_bytes == 128 * (24 // 8 + 8)


class TestProbe:
    def test_no_false_negatives(self):
        R = 256
        table = FingerprintTable.build(3, N, R)
        for r in range(1, R + 1):
            assert r in table.probe(pow(3, r, N))

    def test_hits_ascending(self):
        table = FingerprintTable.build(3, N, 256)
        for r in (1, 100, 256):
            hits = table.probe(pow(3, r, N))
            assert hits == sorted(hits)

    def test_miss_on_absent_value(self):
        table = FingerprintTable.build(3, N, 64, w=64)
        # Full-width fingerprints make collisions impossible here.
        assert table.probe(pow(3, 65, N)) == []

    def test_counters(self):
        table = FingerprintTable.build(3, N, 64)
        table.probe(pow(3, 5, N))
        assert table.probes == 1
        assert table.rows_examined > 0
        assert table.rows_skipped == 0


class TestGcdRows:
    def test_row_skipped_semantics(self):
        table = FingerprintTable.build(3, N, 64)
        # Row of r values that are 0 mod 2 cannot be coprime to even s.
        assert table.row_skipped((0, 1, 1), 2)
        assert not table.row_skipped((1, 0, 0), 2)
        assert table.row_skipped((1, 0, 2), 15)
        assert not table.row_skipped((1, 1, 1), 30)

    def test_filter_keeps_every_coprime_hit(self):
        R = 256
        table = FingerprintTable.build(3, N, R)
        for s in range(1, 31):
            for r in random.Random(s).sample(range(1, R + 1), 8):
                target = pow(3, r, N)
                plain = table.probe(target, s)
                filtered = table.probe(target, s, gcd_filter=True)
                assert set(filtered) <= set(plain)
                for hit in plain:
                    if gcd(hit, s) == 1:
                        assert hit in filtered

    def test_skip_fraction_positive(self):
        table = FingerprintTable.build(3, N, 512)
        rng = random.Random(0)
        for s in range(1, 61):
            table.probe(rng.randrange(2, N), s, gcd_filter=True)
        assert table.rows_skipped > 0
        total = table.rows_skipped + table.rows_examined
        assert table.rows_skipped / total >= 0.25
