"""Vectorized numpy sweep; same contract as the compiled kernel."""

import numpy as np

BATCH = 1 << 14


def _decode(indices: np.ndarray, n: int, m: int, p: int) -> np.ndarray:
    digits = np.empty((len(indices), n * m), dtype=indices.dtype)
    rest = indices.copy()
    for pos in range(n * m - 1, -1, -1):
        rest, digits[:, pos] = np.divmod(rest, p)
    return digits.reshape(len(indices), n, m)


def rb_sweep(c, L, R, p, start, stop):
    """Indices in ``[start, stop)`` whose matrix is a relative Rota-Baxter operator mod ``p``.

    Index ``t`` encodes the ``n x m`` matrix whose row-major entries are the
    base-``p`` digits of ``t``, most significant first.
    """
    c = np.asarray(c, dtype=np.int64)
    L = np.asarray(L, dtype=np.int64)
    R = np.asarray(R, dtype=np.int64)
    n, m = L.shape[0], L.shape[1]
    # keep every intermediate below 2**63; fall back to Python ints otherwise
    dtype = np.int64 if p * p * max(n, m) ** 2 < 2**62 else object
    c, L, R = c.astype(dtype), L.astype(dtype), R.astype(dtype)
    found = []
    for lo in range(start, stop, BATCH):
        idx = np.arange(lo, min(lo + BATCH, stop), dtype=np.int64).astype(dtype)
        K = _decode(idx, n, m, p)
        KK = np.einsum("tia,tjb->tijab", K, K) % p
        lhs = np.einsum("ijk,tijab->tabk", c, KK) % p
        act = (np.einsum("tia,ipb->tabp", K, L) + np.einsum("tib,ipa->tabp", K, R)) % p
        rhs = np.einsum("tkp,tabp->tabk", K, act) % p
        ok = np.all(((lhs - rhs) % p == 0).reshape(len(idx), -1), axis=1)
        found.extend(int(i) for i in idx[ok])
    return found
