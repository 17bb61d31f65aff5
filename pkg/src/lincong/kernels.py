"""Enumeration-kernel backend selection.

Prefers the compiled extension and falls back to the pure-Python kernels when
it is missing; set LINCONG_PURE_KERNELS=1 to force the fallback (used by the
parity tests and the kernel benchmark).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("LINCONG_PURE_KERNELS") == "1":
    _impl = _kernels_py
    BACKEND = "pure"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "pure"

hist_all = _impl.hist_all
hist_strict = _impl.hist_strict
hist_distinct = _impl.hist_distinct
hist_blocks = _impl.hist_blocks
hist_domain = _impl.hist_domain
