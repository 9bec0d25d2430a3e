# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep over all n x m matrices mod p in an index range."""

import numpy as np

from libc.stdint cimport int64_t


def rb_sweep(c, L, R, int64_t p, int64_t start, int64_t stop):
    """Indices in ``[start, stop)`` whose matrix is a relative Rota-Baxter operator mod ``p``.

    The matrix for index ``t`` has row-major entries equal to the base-``p``
    digits of ``t``, most significant first. ``p`` must be below 2**30.
    """
    cdef int64_t[:, :, ::1] cc = np.ascontiguousarray(c, dtype=np.int64) % p
    cdef int64_t[:, :, ::1] LL = np.ascontiguousarray(L, dtype=np.int64) % p
    cdef int64_t[:, :, ::1] RR = np.ascontiguousarray(R, dtype=np.int64) % p
    cdef Py_ssize_t n = LL.shape[0], m = LL.shape[1], nm = n * m
    cdef int64_t[::1] K = np.zeros(nm, dtype=np.int64)
    cdef int64_t[::1] act = np.zeros(m, dtype=np.int64)
    cdef int64_t[::1] KKab = np.zeros(n * n, dtype=np.int64)
    cdef Py_ssize_t a, b, i, j, k, q, pos
    cdef int64_t t, rest, lhs, rhs, s
    cdef bint ok
    found = []
    if start >= stop:
        return found
    rest = start
    for pos in range(nm - 1, -1, -1):
        K[pos] = rest % p
        rest //= p
    t = start
    while t < stop:
        ok = True
        for a in range(m):
            if not ok:
                break
            for b in range(m):
                if not ok:
                    break
                for i in range(n):
                    for j in range(n):
                        KKab[i * n + j] = (K[i * m + a] * K[j * m + b]) % p
                # act[q] = sum_i K[i,a] L[i,q,b] + K[i,b] R[i,q,a]
                for q in range(m):
                    s = 0
                    for i in range(n):
                        s = (s + K[i * m + a] * LL[i, q, b] + K[i * m + b] * RR[i, q, a]) % p
                    act[q] = s
                for k in range(n):
                    lhs = 0
                    for i in range(n):
                        for j in range(n):
                            lhs = (lhs + cc[i, j, k] * KKab[i * n + j]) % p
                    rhs = 0
                    for q in range(m):
                        rhs = (rhs + K[k * m + q] * act[q]) % p
                    if lhs != rhs:
                        ok = False
                        break
        if ok:
            found.append(t)
        t += 1
        # odometer increment
        pos = nm - 1
        while pos >= 0:
            K[pos] += 1
            if K[pos] < p:
                break
            K[pos] = 0
            pos -= 1
    return found
