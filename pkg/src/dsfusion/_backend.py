"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python kernels
are the fallback.  ``DSFUSION_BACKEND=python`` or ``DSFUSION_BACKEND=compiled``
forces a choice (the latter raises if the extension is missing), which is how
the benchmark and the parity tests pin each side.
"""

from __future__ import annotations

import os

from . import _kernels_py

_requested = os.environ.get("DSFUSION_BACKEND", "").strip().lower()

if _requested not in ("", "python", "compiled"):
    raise ImportError(
        f"DSFUSION_BACKEND={_requested!r} is not one of 'python' or 'compiled'"
    )

if _requested == "python":
    _kernels = _kernels_py
elif _requested == "compiled":
    from . import _kernels as _kernels  # noqa: PLC0414  (explicit failure wanted)
else:
    try:
        from . import _kernels as _kernels
    except ImportError:
        _kernels = _kernels_py

BACKEND: str = _kernels.BACKEND
combine_products = _kernels.combine_products
conflict_weight = _kernels.conflict_weight


def backend_name() -> str:
    """Which kernel implementation is active: 'compiled' or 'python'."""
    return BACKEND
