"""Dense exact matrices and tensors stored as numpy object arrays.

Entries are field elements (``Fraction`` or ``Residue``); numpy only
provides the indexing, transposition and einsum plumbing.
"""

from __future__ import annotations

import math
import os

import numpy as np

from .errors import GuardRailExceeded, ShapeMismatch, SingularMatrix
from .fields import field_of

DEFAULT_MAX_COEFFS = 10**7


def max_coeffs() -> int:
    raw = os.environ.get("LEIBNIZ_GUARD_MAX_COEFFS")
    if raw is None:
        return DEFAULT_MAX_COEFFS
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_COEFFS


def check_allocation(shape) -> None:
    if isinstance(shape, int):
        shape = (shape,)
    size = math.prod(shape)
    limit = max_coeffs()
    if size > limit:
        raise GuardRailExceeded(
            f"refusing to allocate {size} coefficients (limit {limit}; "
            "set LEIBNIZ_GUARD_MAX_COEFFS to override)"
        )


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in np.asarray(a, dtype=object).flat)


def arrays_equal(a: np.ndarray, b: np.ndarray) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def nonzero_entries(a: np.ndarray, limit: int | None = None) -> list[tuple[tuple[int, ...], object]]:
    """Nonzero coefficients in lexicographic index order (0-based indices)."""
    out = []
    for idx, v in np.ndenumerate(np.asarray(a, dtype=object)):
        if v != 0:
            out.append((tuple(int(i) for i in idx), v))
            if limit is not None and len(out) >= limit:
                break
    return out


def _row_reduce(M: np.ndarray, augment: np.ndarray | None = None):
    """Gauss-Jordan elimination, exact; returns (reduced, augmented, rank)."""
    A = np.array(M, dtype=object, copy=True)
    B = None if augment is None else np.array(augment, dtype=object, copy=True)
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if A[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
            if B is not None:
                B[[r, pivot]] = B[[pivot, r]]
        inv = 1 / A[r, c]
        A[r] = A[r] * inv
        if B is not None:
            B[r] = B[r] * inv
        for i in range(rows):
            if i != r and A[i, c] != 0:
                f = A[i, c]
                A[i] = A[i] - f * A[r]
                if B is not None:
                    B[i] = B[i] - f * B[r]
        r += 1
        if r == rows:
            break
    return A, B, r


def rank(M: np.ndarray) -> int:
    return _row_reduce(np.asarray(M, dtype=object))[2]


def mat_inverse(M: np.ndarray) -> np.ndarray:
    """Exact inverse by Gauss-Jordan elimination. Raises :class:`SingularMatrix`."""
    M = np.asarray(M, dtype=object)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeMismatch(f"mat_inverse needs a square matrix, got shape {M.shape}")
    n = M.shape[0]
    if n == 0:
        return M.copy()
    ident = field_of(M.flat[0]).identity(n)
    _, inv, r = _row_reduce(M, ident)
    if r < n:
        raise SingularMatrix(r, n)
    return inv


def tensor_contract(T: np.ndarray, M: np.ndarray, slot: int) -> np.ndarray:
    """Apply the matrix ``M`` to tensor slot ``slot`` (0-based): T' = (.. ⊗ M ⊗ ..) T."""
    T = np.asarray(T, dtype=object)
    M = np.asarray(M, dtype=object)
    if not 0 <= slot < T.ndim:
        raise ShapeMismatch(f"slot {slot} out of range for an order-{T.ndim} tensor")
    if M.ndim != 2 or M.shape[1] != T.shape[slot]:
        raise ShapeMismatch(f"matrix of shape {M.shape} cannot act on slot of dimension {T.shape[slot]}")
    out = np.tensordot(M, T, axes=([1], [slot]))
    return np.moveaxis(out, 0, slot)


def swap_slots(T: np.ndarray, i: int = 0, j: int = 1) -> np.ndarray:
    """Exchange two tensor slots; the default is the flip τ12 on order-2 tensors."""
    T = np.asarray(T, dtype=object)
    if not (0 <= i < T.ndim and 0 <= j < T.ndim):
        raise ShapeMismatch("slot index out of range")
    return np.swapaxes(T, i, j).copy()


def combine(*terms) -> np.ndarray:
    """Sum of ``coeff * array`` pairs (all arrays of the same shape)."""
    total = None
    for coeff, arr in terms:
        part = arr * coeff if coeff != 1 else arr
        total = part if total is None else total + part
    return total
