"""Reference (numpy) implementation of the dense expansion sweeps.

The working array A has shape (nq, ny, nx, N): q-index, y-index, flattened
nilpotent multi-index, and the exponent of zeta_N.  A factor is the monomial
u = zeta^k q^dq y^dy e^{gamma x}; its action on one (nx, N) cell is
T(v) = roll(X @ v, k) where X is the integer matrix of e^{gamma x} in the
scaled nilpotent basis (None means identity).

int64 arrays are guarded against overflow; object arrays hold Python ints and
never overflow.
"""
from __future__ import annotations

import numpy as np

from .errors import KernelOverflow

LIMIT = 1 << 62


def _transform(v: np.ndarray, k: int, X) -> np.ndarray:
    if X is not None:
        v = np.matmul(X, v)
    return np.roll(v, k, axis=-1) if k else v


def _xnorm(X) -> int:
    if X is None:
        return 1
    return int(np.abs(X.astype(object)).sum(axis=1).max())


def _guard(target: np.ndarray, source: np.ndarray, xnorm: int):
    if target.dtype == object:
        return
    smax = int(np.abs(source).max()) if source.size else 0
    if smax == 0:
        return
    tmax = int(np.abs(target).max()) if target.size else 0
    if tmax + xnorm * smax >= LIMIT:
        raise KernelOverflow("int64 sweep would overflow")


def mul_factor(A: np.ndarray, dq: int, dy: int, k: int, X=None) -> None:
    """In place: A <- A * (1 - u)."""
    nq, ny = A.shape[0], A.shape[1]
    if dq >= nq or abs(dy) >= ny:
        return
    src = A[: nq - dq, max(0, -dy) : ny - max(0, dy)]
    dst = A[dq:, max(0, dy) : ny - max(0, -dy)]
    _guard(dst, src, _xnorm(X))
    dst -= _transform(src.copy(), k, X)


def div_factor(A: np.ndarray, dq: int, dy: int, k: int, X=None) -> None:
    """In place: A <- A / (1 - u), u small (dq > 0, or dq == 0 and dy > 0)."""
    nq, ny = A.shape[0], A.shape[1]
    xnorm = _xnorm(X)
    if dq > 0:
        if abs(dy) >= ny:
            return
        lo_s, hi_s = max(0, -dy), ny - max(0, dy)
        lo_d, hi_d = max(0, dy), ny - max(0, -dy)
        for i in range(dq, nq):
            src = A[i - dq, lo_s:hi_s]
            dst = A[i, lo_d:hi_d]
            _guard(dst, src, xnorm)
            dst += _transform(src, k, X)
    else:
        if dy <= 0:
            raise ValueError("pure-y division needs a positive y step")
        for j in range(dy, ny):
            src = A[:, j - dy]
            dst = A[:, j]
            _guard(dst, src, xnorm)
            dst += _transform(src, k, X)
