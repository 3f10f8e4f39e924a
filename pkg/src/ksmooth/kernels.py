"""Kernel backend selection.

The compiled extension is used when importable; ``KSMOOTH_PURE_PYTHON=1``
forces the pure-Python twin.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("KSMOOTH_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

int_rank = _impl.int_rank
int_solve = _impl.int_solve
dd_insert = _impl.dd_insert
tight_masks = _impl.tight_masks


def available_backends():
    """Map of backend name to kernel module, for tests and benchmarks."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        out["cython"] = _kernels
    return out
