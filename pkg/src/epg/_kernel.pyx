# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled dense expansion sweeps (same semantics as _kernel_py)."""
import numpy as np
from libc.stdint cimport int64_t

from .errors import KernelOverflow

cdef int64_t LIMIT = 4611686018427387904


cdef inline int64_t _abs(int64_t v) noexcept nogil:
    return -v if v < 0 else v


cdef int _apply(int64_t[:, :, :, ::1] A, Py_ssize_t ti, Py_ssize_t tj, Py_ssize_t si, Py_ssize_t sj,
                int64_t sign, Py_ssize_t k, int64_t[:, ::1] X, bint ident, int64_t xnorm,
                int64_t[:, ::1] tmp) noexcept nogil:
    # A[ti, tj] += sign * T(A[si, sj]); returns 1 (and leaves A unchanged) on overflow risk
    cdef Py_ssize_t nx = A.shape[2], N = A.shape[3]
    cdef Py_ssize_t x, y, c, cc
    cdef int64_t smax = 0, tmax = 0, v, acc
    for x in range(nx):
        for c in range(N):
            v = _abs(A[si, sj, x, c])
            if v > smax:
                smax = v
    if smax == 0:
        return 0
    for x in range(nx):
        for c in range(N):
            v = _abs(A[ti, tj, x, c])
            if v > tmax:
                tmax = v
    if smax > (LIMIT - tmax) // xnorm:
        return 1
    if ident:
        for x in range(nx):
            for c in range(N):
                cc = c + k
                if cc >= N:
                    cc -= N
                tmp[x, cc] = A[si, sj, x, c]
    else:
        for y in range(nx):
            for c in range(N):
                acc = 0
                for x in range(nx):
                    if X[y, x] != 0:
                        acc += X[y, x] * A[si, sj, x, c]
                cc = c + k
                if cc >= N:
                    cc -= N
                tmp[y, cc] = acc
    for x in range(nx):
        for c in range(N):
            A[ti, tj, x, c] += sign * tmp[x, c]
    return 0


def _prep(A, X):
    nx = A.shape[2]
    if X is None:
        Xm = np.zeros((1, 1), dtype=np.int64)
        return Xm, True, 1
    Xm = np.ascontiguousarray(X, dtype=np.int64)
    xnorm = int(np.abs(Xm).sum(axis=1).max())
    if xnorm >= LIMIT:
        raise KernelOverflow("transform matrix too large for int64")
    return Xm, False, max(xnorm, 1)


def mul_factor(int64_t[:, :, :, ::1] A, Py_ssize_t dq, Py_ssize_t dy, Py_ssize_t k, X=None):
    """In place: A <- A * (1 - u)."""
    cdef Py_ssize_t nq = A.shape[0], ny = A.shape[1], i, j, si, sj
    cdef int64_t[:, ::1] Xm
    cdef bint ident
    cdef int64_t xnorm
    cdef int err = 0
    Xm_obj, ident, xnorm = _prep(A, X)
    Xm = Xm_obj
    cdef int64_t[:, ::1] tmp = np.zeros((A.shape[2], A.shape[3]), dtype=np.int64)
    with nogil:
        if dq > 0:
            i = nq - 1
            while i >= dq and err == 0:
                for j in range(ny):
                    sj = j - dy
                    if sj < 0 or sj >= ny:
                        continue
                    err = _apply(A, i, j, i - dq, sj, -1, k, Xm, ident, xnorm, tmp)
                    if err:
                        break
                i -= 1
        elif dy > 0:
            j = ny - 1
            while j >= dy and err == 0:
                for i in range(nq):
                    err = _apply(A, i, j, i, j - dy, -1, k, Xm, ident, xnorm, tmp)
                    if err:
                        break
                j -= 1
        elif dy < 0:
            j = 0
            while j < ny + dy and err == 0:
                for i in range(nq):
                    err = _apply(A, i, j, i, j - dy, -1, k, Xm, ident, xnorm, tmp)
                    if err:
                        break
                j += 1
    if err:
        raise KernelOverflow("int64 sweep would overflow")
    if dq == 0 and dy == 0:
        raise ValueError("a kernel factor must move in q or y")


def div_factor(int64_t[:, :, :, ::1] A, Py_ssize_t dq, Py_ssize_t dy, Py_ssize_t k, X=None):
    """In place: A <- A / (1 - u), u small (dq > 0, or dq == 0 and dy > 0)."""
    cdef Py_ssize_t nq = A.shape[0], ny = A.shape[1], i, j, sj
    cdef int64_t[:, ::1] Xm
    cdef bint ident
    cdef int64_t xnorm
    cdef int err = 0
    if dq == 0 and dy <= 0:
        raise ValueError("pure-y division needs a positive y step")
    Xm_obj, ident, xnorm = _prep(A, X)
    Xm = Xm_obj
    cdef int64_t[:, ::1] tmp = np.zeros((A.shape[2], A.shape[3]), dtype=np.int64)
    with nogil:
        if dq > 0:
            i = dq
            while i < nq and err == 0:
                for j in range(ny):
                    sj = j - dy
                    if sj < 0 or sj >= ny:
                        continue
                    err = _apply(A, i, j, i - dq, sj, 1, k, Xm, ident, xnorm, tmp)
                    if err:
                        break
                i += 1
        else:
            j = dy
            while j < ny and err == 0:
                for i in range(nq):
                    err = _apply(A, i, j, i, j - dy, 1, k, Xm, ident, xnorm, tmp)
                    if err:
                        break
                j += 1
    if err:
        raise KernelOverflow("int64 sweep would overflow")
