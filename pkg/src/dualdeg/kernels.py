"""Selects the Walsh-transform kernel at import: compiled if available.

Set DUALDEG_PURE_PYTHON=1 to force the fallback (used by the benchmark and
for debugging); `backend()` reports which kernel is active.
"""

from __future__ import annotations

import os

if os.environ.get("DUALDEG_PURE_PYTHON"):
    from dualdeg._walsh_py import fwht_inplace

    _BACKEND = "python"
else:
    try:
        from dualdeg._walsh import fwht_inplace  # type: ignore[no-redef]

        _BACKEND = "compiled"
    except ImportError:
        from dualdeg._walsh_py import fwht_inplace  # type: ignore[no-redef]

        _BACKEND = "python"

__all__ = ["fwht_inplace", "walsh_transform", "backend"]


def backend() -> str:
    return _BACKEND


def walsh_transform(values: list) -> list:
    """Unnormalized Walsh-Hadamard transform of a copy of `values`."""
    out = list(values)
    fwht_inplace(out)
    return out
