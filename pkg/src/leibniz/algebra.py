"""Leibniz algebras, their representations, and quadratic structures.

Conventions: ``c[i, j, k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.
Matrices act on column vectors, so column ``j`` of ``L_i`` is ``[e_i, e_j]``.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    InputError,
    InternalInconsistency,
    InvalidAlgebra,
    InvalidQuadratic,
    InvalidRepresentation,
    ShapeMismatch,
)
from .fields import QQ, Field
from .report import CheckReport, scan_residual
from .tensors import arrays_equal, rank

__all__ = [
    "LeibnizAlgebra",
    "Representation",
    "QuadraticStructure",
    "check_leibniz",
    "multiplication_operators",
    "regular_representation",
    "zero_representation",
    "check_representation",
    "dual_representation",
    "semidirect_product",
    "direct_sum",
    "check_quadratic",
    "cartan_tensor",
    "coboundary_of_3cochain",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=object, copy=True)
    a.flags.writeable = False
    return a


class LeibnizAlgebra:
    """A finite-dimensional algebra given by structure constants.

    With ``check=True`` (the default for anything built from outside data)
    the Leibniz identity is verified and :class:`InvalidAlgebra` is raised on
    failure.
    """

    def __init__(self, constants, field: Field = QQ, *, check: bool = True, labels=None):
        c = field.array(constants)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise ShapeMismatch(f"structure constants must have shape (n, n, n), got {c.shape}")
        if c.shape[0] == 0:
            raise InputError("dimension must be at least 1")
        self.field = field
        self.c = _frozen(c)
        self.labels = list(labels) if labels is not None else None
        if check:
            rep = check_leibniz(self)
            if not rep.holds:
                w = rep.first()
                raise InvalidAlgebra(f"Leibniz identity fails on basis triple {w.indices}")

    @classmethod
    def from_brackets(cls, n: int, brackets: dict, field: Field = QQ, **kw) -> LeibnizAlgebra:
        """Build from ``{(i, j): {k: coeff}}`` with 1-based indices."""
        if n < 1:
            raise InputError("dimension must be at least 1")
        c = field.zeros((n, n, n))
        for (i, j), out in brackets.items():
            for k, v in out.items():
                c[i - 1, j - 1, k - 1] = field(v)
        return cls(c, field, **kw)

    @classmethod
    def abelian(cls, n: int, field: Field = QQ) -> LeibnizAlgebra:
        return cls(field.zeros((n, n, n)), field, check=False)

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    def bracket(self, x, y) -> np.ndarray:
        return np.einsum("ijk,i,j->k", self.c, np.asarray(x, dtype=object), np.asarray(y, dtype=object))

    def left(self, i: int) -> np.ndarray:
        """Matrix of ``x -> [e_i, x]`` (0-based ``i``)."""
        return self.c[i].T.copy()

    def right(self, i: int) -> np.ndarray:
        """Matrix of ``x -> [x, e_i]`` (0-based ``i``)."""
        return self.c[:, i, :].T.copy()

    def basis(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    def __eq__(self, other):
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return self.field == other.field and arrays_equal(self.c, other.c)

    def __hash__(self):
        return hash((self.field, tuple(self.c.flat)))

    def __repr__(self):
        return f"LeibnizAlgebra(dim={self.dim}, field={self.field!r})"


def leibniz_residual(c: np.ndarray) -> np.ndarray:
    """R[x, y, z, :] = [x,[y,z]] - [[x,y],z] - [y,[x,z]] on basis vectors."""
    return (
        np.einsum("yzm,xmk->xyzk", c, c)
        - np.einsum("xym,mzk->xyzk", c, c)
        - np.einsum("xzm,ymk->xyzk", c, c)
    )


def check_leibniz(algebra: LeibnizAlgebra) -> CheckReport:
    c = np.asarray(algebra.c, dtype=object)
    if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
        raise ShapeMismatch(f"structure constants must have shape (n, n, n), got {c.shape}")
    report = CheckReport("leibniz")
    scan_residual(report, "leibniz-identity", leibniz_residual(c), 3)
    return report


def multiplication_operators(algebra: LeibnizAlgebra) -> tuple[list[np.ndarray], list[np.ndarray]]:
    n = algebra.dim
    return [algebra.left(i) for i in range(n)], [algebra.right(i) for i in range(n)]


class Representation:
    """Actions ``rhoL[i]``, ``rhoR[i]`` (m x m matrices) of each basis vector ``e_i``."""

    def __init__(self, algebra: LeibnizAlgebra, rhoL, rhoR, *, check: bool = True):
        f = algebra.field
        L = f.array(rhoL)
        R = f.array(rhoR)
        n = algebra.dim
        if L.ndim != 3 or L.shape[0] != n or L.shape[1] != L.shape[2] or L.shape != R.shape:
            raise ShapeMismatch(
                f"representation matrices must have shape ({n}, m, m); got {L.shape} and {R.shape}"
            )
        if L.shape[1] == 0:
            raise InputError("carrier dimension must be at least 1")
        self.algebra = algebra
        self.rhoL = _frozen(L)
        self.rhoR = _frozen(R)
        if check:
            report = check_representation(self)
            if not report.holds:
                w = report.first()
                raise InvalidRepresentation(f"{w.condition} fails on basis pair {w.indices}")

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.rhoL.shape[1]

    def left(self, x) -> np.ndarray:
        return np.einsum("i,iab->ab", np.asarray(x, dtype=object), self.rhoL)

    def right(self, x) -> np.ndarray:
        return np.einsum("i,iab->ab", np.asarray(x, dtype=object), self.rhoR)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and arrays_equal(self.rhoL, other.rhoL)
            and arrays_equal(self.rhoR, other.rhoR)
        )

    def __repr__(self):
        return f"Representation(algebra_dim={self.algebra.dim}, carrier_dim={self.dim})"


def regular_representation(algebra: LeibnizAlgebra) -> Representation:
    L, R = multiplication_operators(algebra)
    return Representation(algebra, np.array(L, dtype=object), np.array(R, dtype=object), check=False)


def zero_representation(algebra: LeibnizAlgebra, m: int) -> Representation:
    z = algebra.field.zeros((algebra.dim, m, m))
    return Representation(algebra, z, z, check=False)


def check_representation(rep: Representation) -> CheckReport:
    c, L, R = rep.algebra.c, rep.rhoL, rep.rhoR
    if L.shape[0] != c.shape[0] or L.shape != R.shape:
        raise ShapeMismatch("representation does not match the algebra")
    report = CheckReport("representation")
    # rho_L([e_i, e_j]) - [rho_L(e_i), rho_L(e_j)]
    res1 = (
        np.einsum("ijk,kab->ijab", c, L)
        - np.einsum("iab,jbc->ijac", L, L)
        + np.einsum("jab,ibc->ijac", L, L)
    )
    scan_residual(report, "left-action-morphism", res1, 2)
    # rho_R([e_i, e_j]) - [rho_L(e_i), rho_R(e_j)]
    res2 = (
        np.einsum("ijk,kab->ijab", c, R)
        - np.einsum("iab,jbc->ijac", L, R)
        + np.einsum("jab,ibc->ijac", R, L)
    )
    scan_residual(report, "right-action-compatibility", res2, 2)
    # rho_R(e_j) rho_L(e_i) + rho_R(e_j) rho_R(e_i)
    res3 = np.einsum("jab,ibc->ijac", R, L + R)
    scan_residual(report, "right-action-annihilation", res3, 2)
    return report


def dual_representation(rep: Representation) -> Representation:
    """The representation ``(rho_L^*, -rho_L^* - rho_R^*)`` on the dual space.

    For a matrix ``A`` the dual action is ``A^* = -A^T``, so that
    ``<A^* xi, v> = -<xi, A v>``.
    """
    Lt = np.transpose(rep.rhoL, (0, 2, 1))
    Rt = np.transpose(rep.rhoR, (0, 2, 1))
    return Representation(rep.algebra, -Lt, Lt + Rt, check=False)


def semidirect_product(rep: Representation) -> LeibnizAlgebra:
    """``g ⋉ V`` with basis ``(e_1..e_n, v_1..v_m)``.

    ``[x+u, y+v] = [x,y] + rho_L(x) v + rho_R(y) u``.
    """
    g = rep.algebra
    n, m = g.dim, rep.dim
    c = g.field.zeros((n + m, n + m, n + m))
    c[:n, :n, :n] = g.c
    # [e_i, v_b] = sum_a rhoL[i][a][b] v_a ; [v_b, e_j] = sum_a rhoR[j][a][b] v_a
    c[:n, n:, n:] = np.transpose(rep.rhoL, (0, 2, 1))
    c[n:, :n, n:] = np.transpose(rep.rhoR, (2, 0, 1))
    return LeibnizAlgebra(c, g.field, check=False)


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra) -> LeibnizAlgebra:
    if a.field != b.field:
        from .errors import MixedFieldContext

        raise MixedFieldContext("summands live over different fields")
    n, m = a.dim, b.dim
    c = a.field.zeros((n + m, n + m, n + m))
    c[:n, :n, :n] = a.c
    c[n:, n:, n:] = b.c
    return LeibnizAlgebra(c, a.field, check=False)


class QuadraticStructure:
    """A bilinear form ``omega[i, j] = ω(e_i, e_j)`` on a Leibniz algebra."""

    def __init__(self, algebra: LeibnizAlgebra, omega):
        w = algebra.field.array(omega)
        if w.shape != (algebra.dim, algebra.dim):
            raise ShapeMismatch(f"form must be {algebra.dim}x{algebra.dim}, got {w.shape}")
        self.algebra = algebra
        self.omega = _frozen(w)

    def sharp(self) -> np.ndarray:
        """Matrix of ω♯: g → g* with ``<ω♯ x, y> = ω(x, y)``."""
        return self.omega.T.copy()

    def __repr__(self):
        return f"QuadraticStructure(dim={self.algebra.dim})"


def _invariance_residuals(c, W):
    theta = np.einsum("xm,yzm->xyz", W, c)
    sym = c + np.transpose(c, (1, 0, 2))
    eq5 = theta - np.einsum("xzm,my->xyz", sym, W)
    eq6 = theta + np.einsum("yxm,mz->xyz", c, W)
    return eq5, eq6


def check_quadratic(qs: QuadraticStructure) -> CheckReport:
    c, W = qs.algebra.c, qs.omega
    n = qs.algebra.dim
    if W.shape != (n, n):
        raise ShapeMismatch("form does not match the algebra")
    report = CheckReport("quadratic")
    skew = W + W.T
    scan_residual(report, "skew-symmetry", skew, 2)
    r = rank(W)
    if r < n:
        report.fail("nondegeneracy")
        report.derived["rank"] = r
    eq5, eq6 = _invariance_residuals(c, W)
    inv = CheckReport("invariance")
    scan_residual(inv, "invariance", eq5, 3)
    cross = CheckReport("invariance-consequence")
    scan_residual(cross, "invariance-consequence", eq6, 3)
    if inv.holds and all(v == 0 for v in skew.flat) and not cross.holds:
        raise InternalInconsistency(
            "skew invariant form violates the derived identity ω(x,[y,z]) = -ω([y,x],z)"
        )
    report.absorb(inv)
    report.absorb(cross)
    return report


def cartan_tensor(qs: QuadraticStructure) -> np.ndarray:
    """Θ[i, j, k] = ω(e_i, [e_j, e_k])."""
    if not check_quadratic(qs).holds:
        raise InvalidQuadratic("form is not a quadratic structure on this algebra")
    return np.einsum("xm,yzm->xyz", qs.omega, qs.algebra.c)


def coboundary_of_3cochain(algebra: LeibnizAlgebra, theta) -> np.ndarray:
    """Leibniz coboundary of a trivial-coefficient 3-cochain, as a 4-tensor."""
    c = algebra.c
    n = algebra.dim
    T = np.asarray(theta, dtype=object)
    if T.shape != (n, n, n):
        raise ShapeMismatch(f"3-cochain must have shape ({n}, {n}, {n}), got {T.shape}")
    return (
        -np.einsum("xym,mzw->xyzw", c, T)
        - np.einsum("xzm,ymw->xyzw", c, T)
        - np.einsum("xwm,yzm->xyzw", c, T)
        + np.einsum("yzm,xmw->xyzw", c, T)
        + np.einsum("ywm,xzm->xyzw", c, T)
        - np.einsum("zwm,xym->xyzw", c, T)
    )
