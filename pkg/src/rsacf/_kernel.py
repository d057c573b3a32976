"""Kernel backend selection: compiled extension when available, else pure Python.

Set RSACF_PURE_PYTHON=1 to force the fallback (used by the benchmark and to
cross-check both backends).
"""

import os

if os.environ.get("RSACF_PURE_PYTHON"):
    from . import _pure as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "python"

power_chain_fps = _impl.power_chain_fps
vvt_scan = _impl.vvt_scan
