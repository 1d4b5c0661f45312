"""Backend selection for the dense expansion sweeps.

The compiled extension is used when it was built; otherwise (or when the
environment variable EPG_KERNEL is set to "numpy") the numpy implementation
is used.  Object-dtype arrays always go through numpy.
"""
from __future__ import annotations

import os

import numpy as np

from . import _kernel_py

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"numpy": _kernel_py}
if _compiled is not None:
    _BACKENDS["cython"] = _compiled


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def _default() -> str:
    wanted = os.environ.get("EPG_KERNEL", "").strip().lower()
    if wanted:
        if wanted not in _BACKENDS:
            raise RuntimeError(f"EPG_KERNEL={wanted!r} is not available (have {available_backends()})")
        return wanted
    return "cython" if "cython" in _BACKENDS else "numpy"


BACKEND = _default()


def set_backend(name: str) -> str:
    """Switch the backend used for int64 arrays; returns the previous one."""
    global BACKEND
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; available: {available_backends()}")
    old, BACKEND = BACKEND, name
    return old


def _impl(A: np.ndarray):
    if A.dtype == object:
        return _kernel_py
    return _BACKENDS[BACKEND]


def mul_factor(A: np.ndarray, dq: int, dy: int, k: int, X=None) -> None:
    _impl(A).mul_factor(A, dq, dy, k, X if X is None or A.dtype != object else X.astype(object))


def div_factor(A: np.ndarray, dq: int, dy: int, k: int, X=None) -> None:
    _impl(A).div_factor(A, dq, dy, k, X if X is None or A.dtype != object else X.astype(object))
