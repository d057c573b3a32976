"""Agreement tests between the compiled kernels and the pure-Python fallback."""

import os
import random
import subprocess
import sys

import pytest

from rsacf import _pure
from rsacf._kernel import BACKEND

try:
    from rsacf import _speedups
except ImportError:  # pragma: no cover - source-only install
    _speedups = None

needs_compiled = pytest.mark.skipif(
    _speedups is None, reason="compiled extension not built")


class TestBackendSelection:
    def test_backend_is_named(self):
        assert BACKEND in ("c", "python")

    @needs_compiled
    def test_compiled_preferred_when_present(self):
        assert BACKEND == "c"

    def test_env_var_forces_pure_fallback(self):
        env = dict(os.environ, RSACF_PURE_PYTHON="1")
        out = subprocess.run(
            [sys.executable, "-c",
             "from rsacf._kernel import BACKEND; print(BACKEND)"],
            capture_output=True, text=True, env=env, check=True,
        ).stdout.strip()
        assert out == "python"


@needs_compiled
class TestPowerChainAgreement:
    @pytest.mark.parametrize("bits", [30, 62, 96, 256])
    def test_matches_pure(self, bits):
        rng = random.Random(bits)
        n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        start, mult = rng.randrange(1, n), rng.randrange(1, n)
        mask = (1 << 32) - 1
        assert _speedups.power_chain_fps(start, mult, n, 50, mask) == \
            _pure.power_chain_fps(start, mult, n, 50, mask)

    def test_chain_values_are_powers(self):
        n = 104729 * 104723
        fps, modmuls = _pure.power_chain_fps(3, 3, n, 20, (1 << 40) - 1)
        assert modmuls == 19
        for r, fp in enumerate(fps, 1):
            assert fp == pow(3, r, n) & ((1 << 40) - 1)


@needs_compiled
class TestVvtScanAgreement:
    def cases(self):
        from rsacf import keygen_weak
        from rsacf.attack import anchor_index, approximation_target
        from rsacf.contfrac import expand
        rng = random.Random(99)
        for _ in range(8):
            pub, _ = keygen_weak(96, 4, rng.randrange(1 << 63))
            m = anchor_index(pub)
            if m is None:
                continue
            cf = expand(approximation_target(pub)[0])
            if m + 1 >= len(cf):
                continue
            p0, q0 = cf.convergent(m)
            p1, q1 = cf.convergent(m + 1)
            yield pub.n, pub.e, p0, q0, p1, q1

    @pytest.mark.parametrize("minus", [False, True])
    def test_matches_pure(self, minus):
        for args in self.cases():
            got_c = _speedups.vvt_scan(*args, 16, 16, minus)
            got_py = _pure.vvt_scan(*args, 16, 16, minus)
            assert got_c == got_py

    def test_bigint_path(self):
        # Bounds past the C-long fast path must route through the big-int
        # branch and still agree; tiny scan with huge convergents.
        n, e = 104729 * 104723, 65537
        big = 1 << 70
        args = (n, e, big + 1, big + 3, big + 5, big + 7)
        assert _speedups.vvt_scan(*args, 3, 3, False) == \
            _pure.vvt_scan(*args, 3, 3, False)
