"""Rota-Baxter and relative Rota-Baxter operators.

An operator ``K: V -> g`` is an ``n x m`` matrix (column ``a`` is ``K v_a``).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .algebra import LeibnizAlgebra, Representation, check_leibniz, semidirect_product
from .cochain import MultilinearMap, SplitSignature, balavoine_bracket, lift
from .errors import (
    InputError,
    InternalInconsistency,
    NotARotaBaxterOperator,
    SearchSpaceTooLarge,
    ShapeMismatch,
)
from .fields import PrimeField
from .report import CheckReport, scan_residual
from .tensors import is_zero

__all__ = [
    "OperatorCandidate",
    "check_rota_baxter",
    "check_relative_rb",
    "relative_rb_residual",
    "derived_bracket",
    "is_mc_relative_rb",
    "induced_bracket",
    "classify_rb_bruteforce",
    "DERIVED_SIGN_GRADING",
    "MAX_SEARCH_SPACE",
]

MAX_SEARCH_SPACE = 10**8

# The sign (-1)^{|g1|} of the derived bracket uses |g1| = arity - 1 (the
# Balavoine degree). With this choice {K, K}(v1, v2) equals
# 2([Kv1, Kv2] - K rhoL(Kv1) v2 - K rhoR(Kv2) v1).
DERIVED_SIGN_GRADING = "arity-1"


@dataclass(frozen=True)
class OperatorCandidate:
    rep: Representation
    K: np.ndarray


def _operator(field, K, rows: int, cols: int) -> np.ndarray:
    K = field.array(K)
    if K.shape != (rows, cols):
        raise ShapeMismatch(f"operator must be {rows}x{cols}, got {K.shape}")
    return K


def check_rota_baxter(algebra: LeibnizAlgebra, R) -> CheckReport:
    """[Rx, Ry] = R([Rx, y] + [x, Ry]) on basis pairs."""
    n = algebra.dim
    R = _operator(algebra.field, R, n, n)
    c = algebra.c
    lhs = np.einsum("ijk,ix,jy->xyk", c, R, R)
    inner = np.einsum("ijk,ix->xjk", c, R) + np.einsum("ijk,jy->iyk", c, R)
    res = lhs - np.einsum("kp,xyp->xyk", R, inner)
    report = CheckReport("rota-baxter")
    scan_residual(report, "rota-baxter", res, 2)
    return report


def relative_rb_residual(rep: Representation, K: np.ndarray) -> np.ndarray:
    c, L, R = rep.algebra.c, rep.rhoL, rep.rhoR
    lhs = np.einsum("ijk,ia,jb->abk", c, K, K)
    act = np.einsum("ia,ipb->abp", K, L) + np.einsum("ib,ipa->abp", K, R)
    return lhs - np.einsum("kp,abp->abk", K, act)


def check_relative_rb(rep: Representation, K) -> CheckReport:
    """[Kv1, Kv2] = K(rhoL(Kv1) v2 + rhoR(Kv2) v1) on basis pairs of V."""
    K = _operator(rep.field, K, rep.algebra.dim, rep.dim)
    report = CheckReport("relative-rota-baxter")
    scan_residual(report, "relative-rota-baxter", relative_rb_residual(rep, K), 2)
    return report


def _lift_to_semidirect(rep: Representation, f: np.ndarray) -> MultilinearMap:
    sig = SplitSignature(rep.algebra.dim, rep.dim)
    arity = f.ndim - 1
    return lift(f, sig, (2,) * arity, 1, rep.field)


def derived_bracket(rep: Representation, g1, g2) -> np.ndarray:
    """Graded bracket on maps ``⊗^a V -> g``.

    Maps are coefficient arrays ``f[a_1, ..., a_k, i]`` (inputs in V, output
    in g). For a linear operator pass ``K.T`` where ``K`` is the ``n x m``
    matrix. Computed as ``(-1)^{|g1|} [[μ̂, ĝ1], ĝ2]`` projected back, with
    ``μ̂`` the semidirect product multiplication and ``|g1| = arity - 1``.
    """
    g1 = rep.field.array(g1)
    g2 = rep.field.array(g2)
    n, m = rep.algebra.dim, rep.dim
    for f in (g1, g2):
        if f.ndim < 2 or f.shape[-1] != n or any(s != m for s in f.shape[:-1]):
            raise ShapeMismatch(
                f"expected coefficients of shape (m,)*a + (n,) with m={m}, n={n}; got {f.shape}"
            )
    mu = MultilinearMap.from_algebra(semidirect_product(rep))
    a1 = g1.ndim - 1
    inner = balavoine_bracket(mu, _lift_to_semidirect(rep, g1))
    full = balavoine_bracket(inner, _lift_to_semidirect(rep, g2))
    T = full.T if (a1 - 1) % 2 == 0 else -full.T
    sig = SplitSignature(n, m)
    arity = T.ndim - 1
    proj = T[(sig.block(2),) * arity + (sig.block(1),)]
    rest = np.array(T, copy=True)
    rest[(sig.block(2),) * arity + (sig.block(1),)] = rep.field.zero
    if not is_zero(rest):
        raise InternalInconsistency("derived bracket left the space of V-to-g maps")
    return np.array(proj, copy=True)


def is_mc_relative_rb(rep: Representation, K) -> bool:
    K = _operator(rep.field, K, rep.algebra.dim, rep.dim)
    return is_zero(derived_bracket(rep, K.T, K.T))


def induced_bracket(rep: Representation, K) -> LeibnizAlgebra:
    """Leibniz structure ``[u, v]_K = rhoL(Ku) v + rhoR(Kv) u`` on V."""
    K = _operator(rep.field, K, rep.algebra.dim, rep.dim)
    report = check_relative_rb(rep, K)
    if not report.holds:
        raise NotARotaBaxterOperator(f"operator fails on basis pair {report.first().indices}")
    d = np.einsum("ia,ipb->abp", K, rep.rhoL) + np.einsum("ib,ipa->abp", K, rep.rhoR)
    out = LeibnizAlgebra(d, rep.field, check=False)
    # K is a morphism from (V, [,]_K) to g
    morph = np.einsum("kp,abp->abk", K, d) - np.einsum("ijk,ia,jb->abk", rep.algebra.c, K, K)
    if not is_zero(morph) or not check_leibniz(out).holds:
        raise InternalInconsistency("induced bracket of a verified operator is inconsistent")
    return out


def _int_arrays(rep: Representation):
    p = rep.field.p
    to_int = np.vectorize(lambda x: int(x) % p, otypes=[np.int64])
    return to_int(rep.algebra.c), to_int(rep.rhoL), to_int(rep.rhoR)


def _sweep_chunk(args):
    c, L, R, p, start, stop, backend = args
    return _kernels.get_backend(backend)(c, L, R, p, start, stop)


def decode_index(idx: int, n: int, m: int, p: int) -> list[int]:
    """Entries of the ``idx``-th matrix in lexicographic order of flattened entries."""
    digits = []
    for _ in range(n * m):
        idx, d = divmod(idx, p)
        digits.append(d)
    return digits[::-1]


def classify_rb_bruteforce(
    rep: Representation, *, jobs: int = 1, backend: str | None = None
) -> list[np.ndarray]:
    """Every relative Rota-Baxter operator over F_p, sorted lexicographically.

    The search space is cut into contiguous index ranges; each range is
    swept independently and the results concatenated in range order, so the
    output does not depend on ``jobs``.
    """
    field = rep.field
    if not isinstance(field, PrimeField):
        raise InputError("brute-force classification needs a prime field")
    n, m, p = rep.algebra.dim, rep.dim, field.p
    total = p ** (n * m)
    if total > MAX_SEARCH_SPACE:
        raise SearchSpaceTooLarge(f"search space p^(n*m) = {total} exceeds {MAX_SEARCH_SPACE}")
    if jobs < 1:
        raise InputError("jobs must be at least 1")
    c, L, R = _int_arrays(rep)
    name = backend or _kernels.BACKEND
    n_chunks = max(1, min(total, jobs * 4))
    step = math.ceil(total / n_chunks)
    tasks = [(c, L, R, p, s, min(s + step, total), name) for s in range(0, total, step)]
    if jobs == 1 or len(tasks) == 1:
        parts = [_sweep_chunk(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sweep_chunk, tasks))
    out = []
    for part in parts:
        for idx in part:
            digits = decode_index(int(idx), n, m, p)
            out.append(field.array(np.array(digits, dtype=object).reshape(n, m)))
    return out
