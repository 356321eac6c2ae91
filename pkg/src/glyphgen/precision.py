"""Global floating-point precision switch.

Training and sampling run in float32 for speed. Gradient-check tests flip
the default to float64 so central finite differences can be compared at
tight tolerances.
"""

from __future__ import annotations

from contextlib import contextmanager

import numpy as np

_default_dtype = np.float32


def default_dtype() -> np.dtype:
    return np.dtype(_default_dtype)


def set_default_dtype(dtype) -> None:
    dt = np.dtype(dtype)
    if dt not in (np.dtype(np.float32), np.dtype(np.float64)):
        raise ValueError(f"default dtype must be float32 or float64, got {dt}")
    global _default_dtype
    _default_dtype = dt.type


@contextmanager
def use_dtype(dtype):
    """Temporarily switch the default dtype (used by 64-bit gradient checks)."""
    previous = _default_dtype
    set_default_dtype(dtype)
    try:
        yield
    finally:
        set_default_dtype(previous)
