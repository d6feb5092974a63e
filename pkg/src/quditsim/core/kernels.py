"""Hot kernels for gate application on d^n statevectors.

Two interchangeable implementations are provided:

* a pure-numpy path based on axis reshuffling and one matmul, and
* a numba @njit gather/scatter kernel over the flat amplitude array.

The active backend is chosen once at import time from the environment
variable ``QUDITSIM_KERNEL`` ("numba" or "numpy"; default "numba" when
numba is importable, "numpy" otherwise).

Index convention (used everywhere in this package): site 0 is the least
significant digit of the basis index, i.e. basis index k encodes the digit
of site s as (k // d**s) % d.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap(args[0]) if args and callable(args[0]) else wrap


BACKEND = os.environ.get("QUDITSIM_KERNEL", "numba" if _HAVE_NUMBA else "numpy")
if BACKEND not in ("numba", "numpy"):
    raise ValueError(f"QUDITSIM_KERNEL must be 'numba' or 'numpy', got {BACKEND!r}")
if BACKEND == "numba" and not _HAVE_NUMBA:
    BACKEND = "numpy"


def apply_matrix_numpy(amps: np.ndarray, mat: np.ndarray, targets: tuple[int, ...],
                       d: int, n_sites: int) -> np.ndarray:
    """Apply ``mat`` (d^k x d^k) to ``targets`` of a flat amplitude array.

    ``targets[0]`` is the least significant digit of the matrix index.
    """
    k = len(targets)
    tensor = amps.reshape([d] * n_sites)
    # axis for site s is n_sites-1-s (numpy's leading axis is the most
    # significant digit). The matrix index has targets[0] least significant,
    # so the moved target axes are ordered targets[k-1], ..., targets[0].
    axes = [n_sites - 1 - s for s in reversed(targets)]
    rest = [a for a in range(n_sites) if a not in axes]
    tensor = np.transpose(tensor, axes + rest)
    out = mat @ tensor.reshape(d**k, -1)
    out = out.reshape([d] * n_sites)
    inv = np.argsort(axes + rest)
    return np.transpose(out, inv).reshape(-1).copy()


@njit(cache=True)
def _apply_kernel(amps, out, mat, t_offsets, r_strides, r_dims, m, n_rest):
    scratch = np.empty(m, dtype=np.complex128)
    for r in range(n_rest):
        base = 0
        rr = r
        for i in range(r_strides.size):
            base += (rr % r_dims[i]) * r_strides[i]
            rr //= r_dims[i]
        for j in range(m):
            scratch[j] = amps[base + t_offsets[j]]
        for i in range(m):
            acc = 0.0 + 0.0j
            for j in range(m):
                acc += mat[i, j] * scratch[j]
            out[base + t_offsets[i]] = acc


def apply_matrix_numba(amps: np.ndarray, mat: np.ndarray, targets: tuple[int, ...],
                       d: int, n_sites: int) -> np.ndarray:
    k = len(targets)
    m = d**k
    # offset of matrix-index j within the flat array
    t_offsets = np.zeros(m, dtype=np.int64)
    for j in range(m):
        jj = j
        for t in targets:
            t_offsets[j] += (jj % d) * d**t
            jj //= d
    rest_sites = [s for s in range(n_sites) if s not in targets]
    r_strides = np.array([d**s for s in rest_sites], dtype=np.int64)
    r_dims = np.full(len(rest_sites), d, dtype=np.int64)
    out = np.empty_like(amps)
    _apply_kernel(np.ascontiguousarray(amps, dtype=np.complex128), out,
                  np.ascontiguousarray(mat, dtype=np.complex128),
                  t_offsets, r_strides, r_dims, m, d ** len(rest_sites))
    return out


def apply_matrix(amps, mat, targets, d, n_sites):
    if BACKEND == "numba":
        return apply_matrix_numba(amps, mat, targets, d, n_sites)
    return apply_matrix_numpy(amps, mat, targets, d, n_sites)
