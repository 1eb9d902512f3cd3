"""Contraction kernels: numba-compiled loops with a pure-numpy fallback.

Every tensor contraction in the package bottoms out in ``matmul(a, b,
tag)``, a flat semiring matrix product. With the Bool semiring the sum is
a saturating OR, so relational composition stays exact; the other
semirings use the dtype's own arithmetic. Set ``DIAGRAMMAR_NUMBA=0`` to
force the numpy path (the default tries numba and falls back silently);
``backend_in_use()`` reports which path ended up active.
"""

import os

import numpy as np

_WANT_NUMBA = os.environ.get("DIAGRAMMAR_NUMBA", "1") != "0"
_numba_ready = False

if _WANT_NUMBA:
    try:
        from numba import njit

        @njit(cache=True)
        def _mm_num(a, b):
            n, k = a.shape
            m = b.shape[1]
            out = np.zeros((n, m), dtype=a.dtype)
            for i in range(n):
                for t in range(k):
                    v = a[i, t]
                    if v != 0:
                        for j in range(m):
                            out[i, j] += v * b[t, j]
            return out

        @njit(cache=True)
        def _mm_bool(a, b):
            n, k = a.shape
            m = b.shape[1]
            out = np.zeros((n, m), dtype=np.bool_)
            for i in range(n):
                for j in range(m):
                    for t in range(k):
                        if a[i, t] and b[t, j]:
                            out[i, j] = True
                            break
            return out

        _numba_ready = True
    except Exception:  # pragma: no cover - numba missing or broken
        _numba_ready = False


def backend_in_use():
    return "numba" if _numba_ready else "numpy"


def _mm_numpy(a, b, saturate):
    out = a @ b
    return out != 0 if saturate else out


def matmul(a, b, tag):
    """Semiring product of two 2d arrays; ``tag`` names the semiring."""
    saturate = tag == "Bool"
    if not _numba_ready:
        return _mm_numpy(a, b, saturate)
    if saturate:
        return _mm_bool(np.ascontiguousarray(a), np.ascontiguousarray(b))
    return _mm_num(np.ascontiguousarray(a), np.ascontiguousarray(b))


def contract(a, b, n_axes, tag):
    """Contract the last ``n_axes`` of ``a`` with the first of ``b``.

    The semiring analogue of ``np.tensordot(a, b, n_axes)``: both arrays
    are flattened to matrices around the contracted block, multiplied by
    the active kernel, and reshaped back.
    """
    shared = a.shape[len(a.shape) - n_axes:] if n_axes else ()
    if n_axes and shared != b.shape[:n_axes]:
        raise ValueError("contracted axes disagree: {} vs {}".format(
            shared, b.shape[:n_axes]))
    left = a.shape[:len(a.shape) - n_axes]
    right = b.shape[n_axes:]
    mid = int(np.prod(shared, dtype=np.int64)) if n_axes else 1
    flat = matmul(a.reshape(-1, mid), b.reshape(mid, -1), tag)
    return flat.reshape(left + right)
