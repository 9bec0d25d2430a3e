"""Leibniz-dendriform algebras and their link to Rota-Baxter operators.

Both products are stored like structure constants: ``left[i, j, k]`` is the
coefficient of ``e_k`` in ``e_i ◁ e_j`` and ``right[i, j, k]`` the one in
``e_i ▷ e_j``.
"""

from __future__ import annotations

import numpy as np

from .algebra import (
    LeibnizAlgebra,
    Representation,
    check_leibniz,
    check_representation,
)
from .errors import (
    InternalInconsistency,
    NotARotaBaxterOperator,
    NotDendriform,
    SearchSpaceTooLarge,
    ShapeMismatch,
    SingularK,
    SingularMatrix,
)
from .fields import QQ, Field
from .report import CheckReport, scan_residual
from .rota_baxter import check_relative_rb, induced_bracket
from .tensors import arrays_equal, mat_inverse, max_coeffs
from .yang_baxter import RMatrix, solution_from_relative_rb

__all__ = [
    "DendriformAlgebra",
    "check_dendriform",
    "subadjacent",
    "dendriform_rep",
    "dendriform_from_rb",
    "compatible_from_invertible_rb",
    "omni_lie",
    "canonical_r",
]


class DendriformAlgebra:
    def __init__(self, left, right, field: Field = QQ):
        left, right = field.array(left), field.array(right)
        for a in (left, right):
            if a.ndim != 3 or len(set(a.shape)) != 1 or a.shape[0] == 0:
                raise ShapeMismatch(f"products must have shape (n, n, n) with n >= 1, got {a.shape}")
        if left.shape != right.shape:
            raise ShapeMismatch(f"product shapes differ: {left.shape} vs {right.shape}")
        left.flags.writeable = False
        right.flags.writeable = False
        self.left, self.right, self.field = left, right, field

    @property
    def dim(self) -> int:
        return self.left.shape[0]

    def __eq__(self, other):
        if not isinstance(other, DendriformAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and arrays_equal(self.left, other.left)
            and arrays_equal(self.right, other.right)
        )

    def __hash__(self):
        return hash((self.field, tuple(self.left.flat), tuple(self.right.flat)))

    def __repr__(self):
        return f"DendriformAlgebra(dim={self.dim}, field={self.field!r})"


def check_dendriform(A: DendriformAlgebra) -> CheckReport:
    lp, rp = A.left, A.right
    e = np.einsum
    report = CheckReport("dendriform")
    # (x◁y)◁z - x◁(y◁z) + y◁(x◁z) + (x▷y)◁z
    res = (
        e("xym,mzk->xyzk", lp, lp)
        - e("yzm,xmk->xyzk", lp, lp)
        + e("xzm,ymk->xyzk", lp, lp)
        + e("xym,mzk->xyzk", rp, lp)
    )
    scan_residual(report, "left-left", res, 3)
    # x◁(y▷z) - (x◁y)▷z - y▷(x◁z) - y▷(x▷z)
    res = (
        e("yzm,xmk->xyzk", rp, lp)
        - e("xym,mzk->xyzk", lp, rp)
        - e("xzm,ymk->xyzk", lp, rp)
        - e("xzm,ymk->xyzk", rp, rp)
    )
    scan_residual(report, "left-right", res, 3)
    # x▷(y▷z) - (x▷y)▷z - y◁(x▷z) + x▷(y◁z)
    res = (
        e("yzm,xmk->xyzk", rp, rp)
        - e("xym,mzk->xyzk", rp, rp)
        - e("xzm,ymk->xyzk", rp, lp)
        + e("yzm,xmk->xyzk", lp, rp)
    )
    scan_residual(report, "right-right", res, 3)
    return report


def _require(A: DendriformAlgebra) -> None:
    report = check_dendriform(A)
    if not report.holds:
        w = report.first()
        raise NotDendriform(f"{w.condition} axiom fails on basis triple {w.indices}")


def subadjacent(A: DendriformAlgebra) -> LeibnizAlgebra:
    """``[x, y] = x ◁ y + x ▷ y``."""
    _require(A)
    g = LeibnizAlgebra(A.left + A.right, A.field, check=False)
    if not check_leibniz(g).holds:
        raise InternalInconsistency("sub-adjacent bracket of a dendriform algebra is not Leibniz")
    return g


def dendriform_rep(A: DendriformAlgebra) -> Representation:
    """``(A; L_◁, R_▷)`` over the sub-adjacent algebra."""
    g = subadjacent(A)
    rep = Representation(
        g,
        np.transpose(A.left, (0, 2, 1)),
        np.transpose(A.right, (1, 2, 0)),
        check=False,
    )
    if not check_representation(rep).holds:
        raise InternalInconsistency("dendriform actions do not form a representation")
    return rep


def dendriform_from_rb(rep: Representation, K) -> DendriformAlgebra:
    """``u ▷ v = ρR(Kv) u`` and ``u ◁ v = ρL(Ku) v`` on V."""
    report = check_relative_rb(rep, K)
    if not report.holds:
        raise NotARotaBaxterOperator(f"operator fails on basis pair {report.first().indices}")
    K = rep.field.array(K)
    left = np.einsum("iu,ikv->uvk", K, rep.rhoL)
    right = np.einsum("iv,iku->uvk", K, rep.rhoR)
    A = DendriformAlgebra(left, right, rep.field)
    if not check_dendriform(A).holds:
        raise InternalInconsistency("products induced by a verified operator violate the dendriform axioms")
    if not arrays_equal(left + right, induced_bracket(rep, K).c):
        raise InternalInconsistency("sum of the induced products differs from the induced bracket")
    return A


def compatible_from_invertible_rb(rep: Representation, K) -> DendriformAlgebra:
    """``x ▷ y = K ρR(y) K^{-1} x`` and ``x ◁ y = K ρL(x) K^{-1} y`` on g."""
    K = rep.field.array(K)
    if K.shape != (rep.algebra.dim, rep.dim):
        raise ShapeMismatch(f"operator must be {rep.algebra.dim}x{rep.dim}, got {K.shape}")
    try:
        Kinv = mat_inverse(K)
    except SingularMatrix as exc:
        raise SingularK(exc.rank, exc.size) from None
    report = check_relative_rb(rep, K)
    if not report.holds:
        raise NotARotaBaxterOperator(f"operator fails on basis pair {report.first().indices}")
    left = np.einsum("kp,xpq,qy->xyk", K, rep.rhoL, Kinv)
    right = np.einsum("kp,ypq,qx->xyk", K, rep.rhoR, Kinv)
    A = DendriformAlgebra(left, right, rep.field)
    if not check_dendriform(A).holds or not arrays_equal(left + right, rep.algebra.c):
        raise InternalInconsistency("compatible products do not split the original bracket")
    return A


def omni_lie(m: int, field: Field = QQ) -> DendriformAlgebra:
    """Products on ``gl(V) ⊕ V`` with ``dim V = m``.

    ``(A+u) ◁ (B+v) = AB + Av`` and ``(A+u) ▷ (B+v) = -BA``; the basis is
    ``E_11, E_12, ..., E_mm`` followed by the basis of V.
    """
    if m < 1:
        raise ShapeMismatch("dimension of V must be at least 1")
    d = m * m + m
    if d**3 > max_coeffs():
        raise SearchSpaceTooLarge(f"omni-Lie algebra of dimension {d} exceeds the coefficient guard")
    left = field.zeros((d, d, d))
    right = field.zeros((d, d, d))
    for i in range(m):
        for j in range(m):
            for k in range(m):
                # E_ij ◁ E_jk = E_ik and E_ij ▷ E_ki = -E_kj
                left[i * m + j, j * m + k, i * m + k] = field.one
                right[i * m + j, k * m + i, k * m + j] = -field.one
            left[i * m + j, m * m + j, m * m + i] = field.one
    return DendriformAlgebra(left, right, field)


def canonical_r(A: DendriformAlgebra) -> tuple[LeibnizAlgebra, RMatrix]:
    """``r = Σ (e_i* ⊗ e_i + e_i ⊗ e_i*)`` in ``A ⋉ A*`` for the dual of ``(A; L_◁, R_▷)``."""
    rep = dendriform_rep(A)
    return solution_from_relative_rb(rep, A.field.identity(A.dim))
