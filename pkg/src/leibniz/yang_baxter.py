"""Tensor form of the derived bracket and the classical Leibniz Yang-Baxter equation.

An element of ``⊗^k g`` is a ``(n,)*k`` array. ``Ψ`` sends it to the map
``⊗^{k-1} g* -> g`` whose coefficient array (inputs first, output last) is
the same array, so ``Ψ`` and ``Υ`` are the identity on coefficients. As a
matrix acting on columns, ``r♯ = Ψ(r)`` is ``r^T``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    LeibnizAlgebra,
    QuadraticStructure,
    Representation,
    check_quadratic,
    dual_representation,
    multiplication_operators,
    regular_representation,
    semidirect_product,
)
from .bialgebra import BialgebraPair
from .errors import (
    InputError,
    InternalInconsistency,
    InvalidQuadratic,
    NotARotaBaxterOperator,
    ShapeMismatch,
    SingularMatrix,
    SingularRSharp,
)
from .report import CheckReport, scan_residual
from .rota_baxter import check_relative_rb, check_rota_baxter, derived_bracket, induced_bracket
from .tensors import arrays_equal, is_zero, mat_inverse

__all__ = [
    "RMatrix",
    "psi",
    "upsilon",
    "tensor_bracket",
    "tensor_bracket_22_closed",
    "check_clybe",
    "r_sharp",
    "r_from_operator",
    "closed_form_from_r",
    "quadratic_bridge",
    "solution_from_relative_rb",
    "triangular_pair",
]


@dataclass(frozen=True)
class RMatrix:
    algebra: LeibnizAlgebra
    r: np.ndarray

    def __post_init__(self):
        r = self.algebra.field.array(self.r)
        n = self.algebra.dim
        if r.shape != (n, n):
            raise ShapeMismatch(f"r must be {n}x{n}, got {r.shape}")
        r.flags.writeable = False
        object.__setattr__(self, "r", r)

    @property
    def symmetric(self) -> bool:
        return arrays_equal(self.r, self.r.T)


def _tensor(algebra: LeibnizAlgebra, P, min_order: int = 2) -> np.ndarray:
    P = algebra.field.array(P)
    n = algebra.dim
    if P.ndim < min_order or any(s != n for s in P.shape):
        raise ShapeMismatch(f"expected a tensor of order >= {min_order} over dimension {n}, got {P.shape}")
    return P


def psi(P) -> np.ndarray:
    """Coefficients of ``Ψ(P)``: ``Ψ(P)(ξ_1..ξ_k)`` paired with ``ξ_{k+1}`` is ``P(ξ_1..ξ_{k+1})``."""
    P = np.array(P, dtype=object)
    if P.ndim < 2:
        raise ShapeMismatch("Ψ needs a tensor of order at least 2")
    return P.copy()


def upsilon(f) -> np.ndarray:
    """Inverse of :func:`psi`."""
    f = np.array(f, dtype=object)
    if f.ndim < 2:
        raise ShapeMismatch("Υ needs a map of arity at least 1")
    return f.copy()


def tensor_bracket(algebra: LeibnizAlgebra, P, Q) -> np.ndarray:
    """``[[P, Q]] = Υ{Ψ(P), Ψ(Q)}`` using the derived bracket for the dual regular representation."""
    P = _tensor(algebra, P)
    Q = _tensor(algebra, Q)
    rep = dual_representation(regular_representation(algebra))
    return upsilon(derived_bracket(rep, psi(P), psi(Q)))


def tensor_bracket_22_closed(algebra: LeibnizAlgebra, P, Q) -> np.ndarray:
    """Closed formula for ``[[P, Q]]`` with ``P, Q`` in ``g ⊗ g``, extended bilinearly."""
    P = _tensor(algebra, P)
    Q = _tensor(algebra, Q)
    if P.ndim != 2 or Q.ndim != 2:
        raise ShapeMismatch("closed formula applies to order-2 tensors only")
    c = algebra.c
    e = np.einsum
    # x⊗y = e_a⊗e_b from P, z⊗w = e_c⊗e_d from Q; output index order ijk
    return (
        e("ak,id,daj->ijk", P, Q, c)  # z ⊗ [w,x] ⊗ y
        - e("ak,jd,dai->ijk", P, Q, c)  # [w,x] ⊗ z ⊗ y
        - e("ak,jd,adi->ijk", P, Q, c)  # [x,w] ⊗ z ⊗ y
        + e("jb,id,dbk->ijk", P, Q, c)  # z ⊗ x ⊗ [w,y]
        + e("ib,jd,bdk->ijk", P, Q, c)  # x ⊗ z ⊗ [y,w]
        + e("ib,ck,bcj->ijk", P, Q, c)  # x ⊗ [y,z] ⊗ w
        - e("jb,ck,bci->ijk", P, Q, c)  # [y,z] ⊗ x ⊗ w
        - e("jb,ck,cbi->ijk", P, Q, c)  # [z,y] ⊗ x ⊗ w
    )


def check_clybe(rm: RMatrix, *, route: str = "closed") -> CheckReport:
    """Symmetric and ``[[r, r]] = 0``.

    ``route`` selects the closed formula (default), the transfer through
    the derived bracket, or ``"both"`` (the two must agree).
    """
    report = CheckReport("clybe")
    r = rm.r
    if not rm.symmetric:
        report.fail("symmetry", (), r - r.T)
        return report
    if route == "closed":
        rr = tensor_bracket_22_closed(rm.algebra, r, r)
    elif route == "transfer":
        rr = tensor_bracket(rm.algebra, r, r)
    elif route == "both":
        rr = tensor_bracket_22_closed(rm.algebra, r, r)
        if not arrays_equal(rr, tensor_bracket(rm.algebra, r, r)):
            raise InternalInconsistency("closed formula and transfer route disagree on [[r, r]]")
    else:
        raise InputError(f"unknown route {route!r}")
    if not is_zero(rr):
        report.fail("yang-baxter", (), rr)
    return report


def r_sharp(rm: RMatrix) -> np.ndarray:
    """Matrix of ``r♯: g* -> g`` with ``<r♯ ξ, η> = r(ξ, η)``."""
    return rm.r.T.copy()


def r_from_operator(algebra: LeibnizAlgebra, K) -> RMatrix:
    """Tensor form ``Υ(K)`` of an operator ``K: g* -> g`` given as a matrix."""
    K = algebra.field.array(K)
    return RMatrix(algebra, K.T)


def closed_form_from_r(rm: RMatrix):
    """Form ``B(x, y) = <(r♯)^{-1} x, y>`` and its closedness report.

    For symmetric ``r`` the verdict must match :func:`check_clybe`.
    """
    try:
        inv = mat_inverse(r_sharp(rm))
    except SingularMatrix as exc:
        raise SingularRSharp(exc.rank, exc.size) from None
    B = inv.T.copy()
    c = rm.algebra.c
    e = np.einsum
    res = e("xym,zm->xyz", c, B) + e("xzm,ym->xyz", c, B) - e("yzm,xm->xyz", c, B) - e("zym,xm->xyz", c, B)
    report = CheckReport("closed-form")
    if not rm.symmetric:
        report.fail("symmetry", (), rm.r - rm.r.T)
        return B, report
    scan_residual(report, "closed", res, 3)
    if report.holds != check_clybe(rm).holds:
        raise InternalInconsistency("closed-form verdict disagrees with the Yang-Baxter verdict")
    return B, report


def quadratic_bridge(qs: QuadraticStructure, K) -> CheckReport:
    """Relative Rota-Baxter for the dual regular representation versus Rota-Baxter for ``K ω♯``."""
    if not check_quadratic(qs).holds:
        raise InvalidQuadratic("form is not a quadratic structure on this algebra")
    g = qs.algebra
    S = qs.sharp()
    K = g.field.array(K)
    L, R = multiplication_operators(g)
    for i, (Li, Ri) in enumerate(zip(L, R)):
        Ls, Rs = -Li.T, -Ri.T
        if not arrays_equal(S @ Li, Ls @ S) or not arrays_equal(S @ Ri, (-Ls - Rs) @ S):
            raise InternalInconsistency(f"ω♯ fails to intertwine the actions of basis vector {i + 1}")
    rep = dual_representation(regular_representation(g))
    rel = check_relative_rb(rep, K)
    plain = check_rota_baxter(g, K @ S)
    if rel.holds != plain.holds:
        raise InternalInconsistency("relative and plain Rota-Baxter verdicts disagree")
    report = CheckReport("quadratic-bridge")
    report.derived["intertwining"] = "holds"
    report.derived["relative_rota_baxter"] = rel.status
    report.derived["rota_baxter_composite"] = plain.status
    report.absorb(rel)
    return report


def solution_from_relative_rb(rep: Representation, K):
    """Symmetric r-matrix ``Υ(K + K*)`` in ``g ⋉ V*`` (dual representation).

    Returns ``(big_algebra, RMatrix)``; the basis of the big algebra is
    ``(e_1..e_n, v_1*..v_m*)``.
    """
    report = check_relative_rb(rep, K)
    if not report.holds:
        raise NotARotaBaxterOperator(f"operator fails on basis pair {report.first().indices}")
    K = rep.field.array(K)
    n, m = rep.algebra.dim, rep.dim
    big = semidirect_product(dual_representation(rep))
    M = rep.field.zeros((n + m, n + m))
    M[:n, n:] = K
    M[n:, :n] = K.T
    return big, r_from_operator(big, M)


def triangular_pair(rm: RMatrix) -> BialgebraPair:
    """``(g, g*_{r♯})`` for a solution of the classical Leibniz Yang-Baxter equation."""
    report = check_clybe(rm)
    if not report.holds:
        raise InputError(f"r is not a classical Leibniz r-matrix ({report.first().condition} fails)")
    rep = dual_representation(regular_representation(rm.algebra))
    return BialgebraPair(rm.algebra, induced_bracket(rep, r_sharp(rm)))
