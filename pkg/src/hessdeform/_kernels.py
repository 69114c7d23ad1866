"""Batched integer kernels.

The only hot loop in the package is dominantization of many weights at once
(Euler characteristics of large weight multisets, property corpora).  It has a
numba implementation and a vectorised numpy implementation with identical
results.  Set ``HESSDEFORM_DISABLE_JIT=1`` to force the numpy path.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("HESSDEFORM_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None


def dominantize_batch_numpy(mus, cartan):
    """Reflect every row of ``mus`` into the dominant chamber.

    ``mus`` holds weights in fundamental coordinates (one per row), ``cartan``
    is the matrix with ``cartan[j, i] = <alpha_i, alpha_j^vee>``, so column
    ``i`` is the simple root ``alpha_i`` in fundamental coordinates.

    Returns ``(lengths, out)``: ``lengths[k]`` is the number of reflections
    applied, or -1 if a zero coordinate ever appears (singular weight);
    ``out[k]`` is the final weight (meaningful only when ``lengths[k] >= 0``).
    The reflection is always taken at the least index with a negative
    coordinate.
    """
    out = np.array(mus, dtype=np.int64, copy=True)
    if out.ndim != 2:
        raise ValueError("expected a 2-d array of weights")
    m, r = out.shape
    lengths = np.zeros(m, dtype=np.int64)
    active = np.ones(m, dtype=bool)
    cart = np.asarray(cartan, dtype=np.int64)
    while active.any():
        rows = np.flatnonzero(active)
        block = out[rows]
        singular = (block == 0).any(axis=1)
        lengths[rows[singular]] = -1
        negative = block < 0
        done = ~negative.any(axis=1) & ~singular
        active[rows[singular | done]] = False
        step = ~(singular | done)
        if not step.any():
            break
        rows = rows[step]
        block = block[step]
        idx = np.argmax(negative[step], axis=1)
        coeff = block[np.arange(len(rows)), idx]
        out[rows] = block - coeff[:, None] * cart[:, idx].T
        lengths[rows] += 1
    return lengths, out


if njit is not None:

    @njit(cache=True)
    def _dominantize_batch_jit(mus, cartan):
        m, r = mus.shape
        out = mus.copy()
        lengths = np.zeros(m, np.int64)
        for row in range(m):
            steps = 0
            while True:
                idx = -1
                singular = False
                for i in range(r):
                    v = out[row, i]
                    if v == 0:
                        singular = True
                        break
                    if v < 0 and idx < 0:
                        idx = i
                if singular:
                    lengths[row] = -1
                    break
                if idx < 0:
                    lengths[row] = steps
                    break
                c = out[row, idx]
                for j in range(r):
                    out[row, j] -= c * cartan[j, idx]
                steps += 1
        return lengths, out

    def dominantize_batch_jit(mus, cartan):
        mus = np.ascontiguousarray(mus, dtype=np.int64)
        if mus.ndim != 2:
            raise ValueError("expected a 2-d array of weights")
        return _dominantize_batch_jit(mus, np.ascontiguousarray(cartan, dtype=np.int64))

else:  # pragma: no cover
    dominantize_batch_jit = None


if dominantize_batch_jit is not None and not _DISABLED:
    BACKEND = "numba"
    dominantize_batch = dominantize_batch_jit
else:
    BACKEND = "numpy"
    dominantize_batch = dominantize_batch_numpy
