import numpy as np
import pytest

from epg import kernel
from epg.errors import KernelOverflow
from epg.genus import WeightSystem, lg_genus, weighted_cy_genus

BACKENDS = kernel.available_backends()


@pytest.fixture
def backend():
    old = kernel.BACKEND
    yield kernel.set_backend
    kernel.set_backend(old)


def _random(seed, shape=(7, 9, 3, 4)):
    return np.random.default_rng(seed).integers(-50, 50, size=shape).astype(np.int64)


def _x(nx):
    X = np.eye(nx, dtype=np.int64)
    X[np.triu_indices(nx, 1)] = 2
    return X


def test_numpy_always_available():
    assert "numpy" in BACKENDS
    with pytest.raises(ValueError):
        kernel.set_backend("fortran")


@pytest.mark.parametrize("dq,dy,k", [(1, 0, 0), (1, 2, 1), (2, -3, 3), (0, 1, 2)])
def test_backends_agree(backend, dq, dy, k):
    outs = []
    for b in BACKENDS:
        backend(b)
        A = _random(dq * 10 + dy)
        kernel.mul_factor(A, dq, dy, k, _x(3))
        kernel.div_factor(A, dq, dy, k, _x(3))
        outs.append(A)
    for o in outs[1:]:
        assert np.array_equal(outs[0], o)


@pytest.mark.parametrize("b", BACKENDS)
def test_division_undoes_multiplication_on_full_grid(backend, b):
    backend(b)
    A0 = _random(1)
    A0[:, -2:] = 0  # keep y-shifted support inside the grid
    A = A0.copy()
    kernel.div_factor(A, 1, 2, 1, None)
    kernel.mul_factor(A, 1, 2, 1, None)
    assert np.array_equal(A, A0)


@pytest.mark.parametrize("b", BACKENDS)
def test_overflow_is_detected(backend, b):
    backend(b)
    A = np.full((4, 3, 1, 2), 1 << 61, dtype=np.int64)
    with pytest.raises(KernelOverflow):
        kernel.div_factor(A, 1, 0, 0, None)


def test_object_arrays_use_python_ints():
    A = np.full((4, 3, 1, 2), 1 << 61, dtype=object)
    kernel.div_factor(A, 1, 0, 0, None)
    assert A[3, 0, 0, 0] == 4 << 61


def test_genus_identical_across_backends(backend):
    ws = WeightSystem((3, 1, 1, 1), 6)
    results = []
    for b in BACKENDS:
        backend(b)
        results.append((lg_genus(ws, 2, 8).series, weighted_cy_genus(ws, 1, 8).series))
    assert all(r == results[0] for r in results)
