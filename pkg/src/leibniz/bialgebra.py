"""Leibniz bialgebras, matched pairs and Manin triples.

A bialgebra candidate is a pair of algebras ``(g, g*)`` on dual bases; the
cobracket ``Δ`` of ``g`` is always derived from the constants of ``g*``:
``Δ(e_k) = sum_{i,j} d[i, j, k] e_i ⊗ e_j``. Order-2 tensors are stored as
``n x n`` arrays, so ``(A ⊗ B) T = A T B^T`` and ``τ12 T = T^T``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    LeibnizAlgebra,
    QuadraticStructure,
    Representation,
    check_leibniz,
    check_quadratic,
    check_representation,
    dual_representation,
    regular_representation,
    semidirect_product,
)
from .cochain import SplitSignature
from .errors import (
    InputError,
    InternalInconsistency,
    InvalidAlgebra,
    MixedFieldContext,
    NotABialgebra,
    NotAMatchedPair,
    ShapeMismatch,
)
from .report import CheckReport, scan_residual
from .twilled import SplitAlgebra, is_twilled

__all__ = [
    "BialgebraPair",
    "MatchedPairData",
    "check_bialgebra",
    "cobracket_rule_expanded",
    "check_matched_pair",
    "bowtie_product",
    "check_manin_triple",
    "pairing_form",
    "standard_manin_triple",
    "standard_matched_pair",
    "equivalence_harness",
    "flip_bialgebra",
    "matched_pair_from_twilled",
]


@dataclass(frozen=True)
class BialgebraPair:
    g: LeibnizAlgebra
    gstar: LeibnizAlgebra

    def __post_init__(self):
        if self.g.dim != self.gstar.dim:
            raise ShapeMismatch(f"g has dimension {self.g.dim} but g* has {self.gstar.dim}")
        if self.g.field != self.gstar.field:
            raise MixedFieldContext("g and g* live over different fields")

    @property
    def delta(self) -> np.ndarray:
        """``delta[k]`` is the ``n x n`` coefficient array of ``Δ(e_k)``."""
        return np.moveaxis(self.gstar.c, 2, 0).copy()


@dataclass(frozen=True)
class MatchedPairData:
    """``act1`` is a representation of g1 on g2, ``act2`` one of g2 on g1."""

    act1: Representation
    act2: Representation
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        g1, g2 = self.act1.algebra, self.act2.algebra
        if self.act1.dim != g2.dim or self.act2.dim != g1.dim:
            raise ShapeMismatch("each algebra must act on the other")
        if g1.field != g2.field:
            raise MixedFieldContext("the two algebras live over different fields")

    @property
    def g1(self) -> LeibnizAlgebra:
        return self.act1.algebra

    @property
    def g2(self) -> LeibnizAlgebra:
        return self.act2.algebra


def _operators(c: np.ndarray):
    """Stacks of left and right multiplication matrices."""
    return np.transpose(c, (0, 2, 1)), np.transpose(c, (1, 2, 0))


def _require_leibniz(*algebras):
    for a in algebras:
        if not check_leibniz(a).holds:
            raise InvalidAlgebra("input is not a Leibniz algebra")


def check_bialgebra(pair: BialgebraPair) -> CheckReport:
    _require_leibniz(pair.g, pair.gstar)
    c = pair.g.c
    D = pair.delta
    L, R = _operators(c)
    Lt, Rt = np.transpose(L, (0, 2, 1)), np.transpose(R, (0, 2, 1))
    report = CheckReport("bialgebra")
    # (a): τ((R_b ⊗ Id) Δ e_a) = (R_a ⊗ Id) Δ e_b
    res_a = np.einsum("bij,ajk->abki", R, D) - np.einsum("aij,bjk->abik", R, D)
    scan_residual(report, "cobracket-symmetry", res_a, 2)
    # (b)
    S = D + np.transpose(D, (0, 2, 1))
    lhs = np.einsum("abk,kij->abij", c, D)
    rhs = (
        np.einsum("aij,bjk->abik", S, Rt)
        - np.einsum("bij,ajk->abik", L, S)
        - np.einsum("bij,ajk->abik", R, S)
        + np.einsum("bij,ajk->abik", D, Lt)
        + np.einsum("aij,bjk->abik", L, D)
    )
    scan_residual(report, "cobracket-derivation", lhs - rhs, 2)
    return report


def cobracket_rule_expanded(pair: BialgebraPair) -> np.ndarray:
    """Residual of the expanded cobracket rule, indexed ``[a, b, i, j]``.

    It agrees with the derivation rule of :func:`check_bialgebra` whenever
    the symmetry condition holds.
    """
    c = pair.g.c
    D = pair.delta
    L, R = _operators(c)
    Lt, Rt = np.transpose(L, (0, 2, 1)), np.transpose(R, (0, 2, 1))
    Dt = np.transpose(D, (0, 2, 1))
    lhs = np.einsum("abk,kij->abij", c, D)
    rhs = (
        np.einsum("aij,bjk->abik", D, Rt)
        - np.einsum("bij,ajk->abik", L, D)
        - np.einsum("bij,ajk->abik", R, D)
        - np.einsum("bij,ajk->abik", L, Dt)
        - np.einsum("bij,ajk->abik", R, Dt)
        + np.einsum("bij,ajk->abik", D, Lt)
        + np.einsum("aij,bjk->abik", L, D)
        + np.einsum("aij,bjk->abik", R, D)
    )
    return lhs - rhs


def _mp_block(cV, actL, actR, backL, backR):
    """Residuals of the three identities with values in one summand.

    ``cV`` is the bracket of the summand ``V`` receiving values, ``act*``
    the actions on ``V`` of the other algebra ``X`` (shape ``(nX, nV, nV)``)
    and ``back*`` the actions of ``V`` on ``X``. Arrays are indexed
    ``[x, u, v, out]`` with ``x`` in ``X`` and ``u, v`` in ``V``.
    """
    e = np.einsum
    right = (
        e("uvw,xpw->xuvp", cV, actR)
        - e("xwv,uwp->xuvp", actR, cV)
        + e("xwu,vwp->xuvp", actR, cV)
        - e("vix,ipu->xuvp", backL, actR)
        + e("uix,ipv->xuvp", backL, actR)
    )
    left = (
        e("uvw,xpw->xuvp", cV, actL)
        - e("xwu,wvp->xuvp", actL, cV)
        - e("xwv,uwp->xuvp", actL, cV)
        - e("uix,ipv->xuvp", backR, actL)
        - e("vix,ipu->xuvp", backR, actR)
    )
    mixed = e("xwu,wvp->xuvp", actL + actR, cV) + e("uix,ipv->xuvp", backR + backL, actL)
    return right, left, mixed


def _mp_residuals(mp: MatchedPairData):
    a1, a2 = mp.act1, mp.act2
    first = _mp_block(mp.g2.c, a1.rhoL, a1.rhoR, a2.rhoL, a2.rhoR)
    second = _mp_block(mp.g1.c, a2.rhoL, a2.rhoR, a1.rhoL, a1.rhoR)
    return first, second


def _matched_pair_report(mp: MatchedPairData) -> CheckReport:
    n1 = mp.g1.dim
    report = CheckReport("matched-pair")
    for name, rep in (("first-action", mp.act1), ("second-action", mp.act2)):
        report.absorb(check_representation(rep), prefix=name + ":")
    first, second = _mp_residuals(mp)
    names = ("right-action-compatibility", "left-action-compatibility", "mixed-compatibility")
    for cond, res in zip(names, first):
        sub = CheckReport("")
        scan_residual(sub, "on-second:" + cond, res, 3)
        for w in sub.witnesses:
            x, u, v = w.indices
            w.indices = (x, u + n1, v + n1)
            w.residual = [((i[0] + n1,), val) for i, val in w.residual]
        report.absorb(sub)
    for cond, res in zip(names, second):
        sub = CheckReport("")
        scan_residual(sub, "on-first:" + cond, res, 3)
        for w in sub.witnesses:
            u, x, y = w.indices
            w.indices = (u + n1, x, y)
        report.absorb(sub)
    return report


def check_matched_pair(mp: MatchedPairData) -> CheckReport:
    """All six compatibility identities, cross-checked against the bowtie product."""
    report = _matched_pair_report(mp)
    reps_ok = check_representation(mp.act1).holds and check_representation(mp.act2).holds
    if reps_ok:
        bowtie_ok = check_leibniz(bowtie_product(mp, verify=False)).holds
        if bowtie_ok != report.holds:
            raise InternalInconsistency("matched-pair identities disagree with the bowtie Leibniz check")
    return report


def bowtie_product(mp: MatchedPairData, *, verify: bool = True) -> LeibnizAlgebra:
    """The algebra on ``g1 ⊕ g2`` built from the mutual actions."""
    if verify:
        report = _matched_pair_report(mp)
        if not report.holds:
            raise NotAMatchedPair(f"{report.first().condition} fails on {report.first().indices}")
    g1, g2 = mp.g1, mp.g2
    n1, n2 = g1.dim, g2.dim
    a1, a2 = mp.act1, mp.act2
    c = g1.field.zeros((n1 + n2,) * 3)
    c[:n1, :n1, :n1] = g1.c
    c[n1:, n1:, n1:] = g2.c
    # [x, v] = rho2R(v) x + rho1L(x) v ; [u, y] = rho2L(u) y + rho1R(y) u
    c[:n1, n1:, :n1] = np.transpose(a2.rhoR, (2, 0, 1))
    c[:n1, n1:, n1:] = np.transpose(a1.rhoL, (0, 2, 1))
    c[n1:, :n1, :n1] = np.transpose(a2.rhoL, (0, 2, 1))
    c[n1:, :n1, n1:] = np.transpose(a1.rhoR, (2, 0, 1))
    return LeibnizAlgebra(c, g1.field, check=False)


def pairing_form(n: int, field) -> np.ndarray:
    """ω(x + ξ, y + η) = <ξ, y> - <η, x> on ``g ⊕ g*``: the block matrix (0 -I; I 0)."""
    W = field.zeros((2 * n, 2 * n))
    for i in range(n):
        W[i, n + i] = -field.one
        W[n + i, i] = field.one
    return W


def check_manin_triple(G: LeibnizAlgebra, omega, sig) -> CheckReport:
    sig = SplitSignature(*sig).validate()
    if sig.dim != G.dim:
        raise ShapeMismatch("split does not match the algebra")
    report = CheckReport("manin-triple")
    report.absorb(check_leibniz(G))
    qs = QuadraticStructure(G, omega)
    quad = check_quadratic(qs)
    report.absorb(quad)
    report.derived.update({f"quadratic_{k}": v for k, v in quad.derived.items()})
    report.absorb(is_twilled(SplitAlgebra(G, sig)))
    W = qs.omega
    d1 = sig.d1
    scan_residual(report, "first-summand-isotropic", W[:d1, :d1], 2)
    sub = CheckReport("")
    scan_residual(sub, "second-summand-isotropic", W[d1:, d1:], 2)
    for w in sub.witnesses:
        w.indices = tuple(i + d1 for i in w.indices)
    report.absorb(sub)
    return report


def standard_manin_triple(g: LeibnizAlgebra):
    """``(g ⋉ g*, ω, (n, n))`` with g acting on g* by the dual regular representation."""
    G = semidirect_product(dual_representation(regular_representation(g)))
    return G, pairing_form(g.dim, g.field), SplitSignature(g.dim, g.dim)


def standard_matched_pair(pair: BialgebraPair) -> MatchedPairData:
    return MatchedPairData(
        dual_representation(regular_representation(pair.g)),
        dual_representation(regular_representation(pair.gstar)),
    )


def equivalence_harness(pair: BialgebraPair) -> CheckReport:
    """Bialgebra, matched-pair and Manin-triple verdicts; they must coincide."""
    _require_leibniz(pair.g, pair.gstar)
    bi = check_bialgebra(pair)
    mp = standard_matched_pair(pair)
    matched = check_matched_pair(mp)
    G = bowtie_product(mp, verify=False)
    n = pair.g.dim
    manin = check_manin_triple(G, pairing_form(n, pair.g.field), (n, n))
    verdicts = {"bialgebra": bi.holds, "matched_pair": matched.holds, "manin_triple": manin.holds}
    if len(set(verdicts.values())) != 1:
        raise InternalInconsistency(f"equivalent conditions disagree: {verdicts}")
    report = CheckReport("bialgebra-equivalence")
    report.derived.update({k: ("holds" if v else "fails") for k, v in verdicts.items()})
    symmetric = not any(w.condition == "cobracket-symmetry" for w in bi.witnesses)
    if symmetric:
        expanded = cobracket_rule_expanded(pair)
        expanded_ok = all(v == 0 for v in expanded.flat)
        derivation_ok = not any(w.condition == "cobracket-derivation" for w in bi.witnesses)
        report.derived["expanded_rule_agrees"] = expanded_ok == derivation_ok
    report.absorb(bi)
    return report


def flip_bialgebra(pair: BialgebraPair) -> BialgebraPair:
    if not check_bialgebra(pair).holds:
        raise NotABialgebra("input pair is not a bialgebra")
    return BialgebraPair(pair.gstar, pair.g)


def matched_pair_from_twilled(sa: SplitAlgebra) -> MatchedPairData:
    """Recover the mutual actions of a twilled algebra's two summands."""
    if not is_twilled(sa).holds:
        raise InputError("split algebra is not twilled")
    c = sa.algebra.c
    d1 = sa.sig.d1
    f = sa.algebra.field
    g1 = LeibnizAlgebra(c[:d1, :d1, :d1], f, check=False)
    g2 = LeibnizAlgebra(c[d1:, d1:, d1:], f, check=False)
    act1 = Representation(
        g1,
        np.transpose(c[:d1, d1:, d1:], (0, 2, 1)),
        np.transpose(c[d1:, :d1, d1:], (1, 2, 0)),
        check=False,
    )
    act2 = Representation(
        g2,
        np.transpose(c[d1:, :d1, :d1], (0, 2, 1)),
        np.transpose(c[:d1, d1:, :d1], (1, 2, 0)),
        check=False,
    )
    return MatchedPairData(act1, act2)
