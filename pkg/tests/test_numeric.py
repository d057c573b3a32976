"""Unit tests for the arbitrary-precision numeric helpers."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rsacf import NotInvertibleError, isqrt, mod_inv, mod_pow


class TestModPow:
    def test_small_values(self):
        assert mod_pow(2, 10, 1000) == 24
        assert mod_pow(3, 0, 7) == 1
        assert mod_pow(0, 5, 7) == 0

    @given(
        st.integers(min_value=0, max_value=1 << 256),
        st.integers(min_value=0, max_value=1 << 64),
        st.integers(min_value=2, max_value=1 << 256),
    )
    def test_matches_builtin(self, base, exp, mod):
        assert mod_pow(base, exp, mod) == pow(base, exp, mod)

    def test_rejects_small_modulus(self):
        with pytest.raises(ValueError):
            mod_pow(2, 3, 1)
        with pytest.raises(ValueError):
            mod_pow(2, 3, 0)


class TestModInv:
    def test_known_inverse(self):
        assert mod_inv(3, 7) == 5
        assert mod_inv(1, 2) == 1

    @given(
        st.integers(min_value=1, max_value=1 << 128),
        st.integers(min_value=2, max_value=1 << 128),
    )
    def test_inverse_property(self, a, n):
        if math.gcd(a, n) == 1:
            inv = mod_inv(a, n)
            assert 0 < inv < n
            assert a * inv % n == 1
        else:
            with pytest.raises(NotInvertibleError):
                mod_inv(a, n)

    def test_error_carries_gcd(self):
        with pytest.raises(NotInvertibleError) as exc_info:
            mod_inv(6, 15)
        assert exc_info.value.gcd == 3


class TestIsqrt:
    def test_small_values(self):
        assert isqrt(0) == 0
        assert isqrt(1) == 1
        assert isqrt(99) == 9
        assert isqrt(100) == 10

    @given(st.integers(min_value=0, max_value=1 << 512))
    def test_floor_square_root_property(self, x):
        r = isqrt(x)
        assert r * r <= x < (r + 1) * (r + 1)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            isqrt(-1)
