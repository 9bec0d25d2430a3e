"""Acceptance gate: ten criteria, each a single test marked with its number.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import itertools
import time

import numpy as np
import pytest

from helpers import alg2, change_basis, dual_reg, random_invertible, random_leibniz, random_map, rng_from
from leibniz import (
    QQ,
    BialgebraPair,
    LeibnizAlgebra,
    MultilinearMap,
    PrimeField,
    QuadraticStructure,
    SplitAlgebra,
    SplitSignature,
    bidegree,
    canonical_r,
    check_bialgebra,
    check_leibniz,
    check_manin_triple,
    check_matched_pair,
    check_quadratic,
    check_relative_rb,
    classify_rb_bruteforce,
    derived_bracket,
    direct_sum,
    homogeneous_part,
    induced_bracket,
    is_mc_relative_rb,
    is_twilled,
    omni_lie,
    pairing_form,
    regular_representation,
    semidirect_product,
    standard_manin_triple,
    standard_matched_pair,
    twist,
    twist_by_expansion,
)
from leibniz.algebra import cartan_tensor, coboundary_of_3cochain
from leibniz.bialgebra import bowtie_product
from leibniz.cochain import Bidegree, balavoine_bracket
from leibniz.yang_baxter import (
    RMatrix,
    check_clybe,
    closed_form_from_r,
    r_from_operator,
    solution_from_relative_rb,
    tensor_bracket,
    tensor_bracket_22_closed,
    triangular_pair,
)
from oracles import enumerate_relative_rb

F3, F5 = PrimeField(3), PrimeField(5)
FAMILY = [[[1, 1], [1, 0]], [[2, -1], [-1, 0]], [[1, -1], [-1, 1]], [[1, 0], [-1, 0]], [[-2, 0], [2, 0]]]


def ints(a):
    return np.vectorize(int, otypes=[object])(a).tolist()


def flat(K):
    return tuple(int(x) for x in np.asarray(K).flat)


def basis(*idx, n=2):
    T = QQ.zeros((n,) * len(idx))
    T[tuple(i - 1 for i in idx)] = QQ.one
    return T


def combo(terms, order=3):
    T = QQ.zeros((2,) * order)
    for coeff, idx in terms:
        T[tuple(i - 1 for i in idx)] += coeff
    return T


@pytest.mark.criterion(1, "classification of operators on ALG2 over F_5; F_3 oracle")
def test_criterion_1_classification():
    t0 = time.perf_counter()
    rep5 = dual_reg(alg2(F5))
    found = {flat(K) for K in classify_rb_bruteforce(rep5)}
    expected = set()
    for a, b in itertools.product(range(5), repeat=2):
        expected.add((a, b, b, 0))
        expected.add((a, 0, -a % 5, 0))
    expected |= {(c, -c % 5, -c % 5, c) for c in range(5)}
    assert found == expected

    rep3 = dual_reg(alg2(F3))
    oracle = {flat(K) for K in enumerate_relative_rb(ints(rep3.algebra.c), ints(rep3.rhoL), ints(rep3.rhoR), 3)}
    for entries in itertools.product(range(3), repeat=4):
        K = F3.array(np.array(entries, dtype=object).reshape(2, 2))
        assert check_relative_rb(rep3, K).holds == is_mc_relative_rb(rep3, K) == (entries in oracle)
    assert time.perf_counter() - t0 < 5


TABLE = [
    ((1, 1), (1, 1), []),
    ((1, 1), (1, 2), [(1, (1, 1, 1))]),
    ((1, 1), (2, 1), [(-1, (1, 1, 1))]),
    ((1, 1), (2, 2), [(2, (2, 1, 1)), (-1, (1, 2, 1)), (-1, (1, 1, 2))]),
    ((1, 2), (1, 2), [(2, (1, 1, 1))]),
    ((1, 2), (2, 1), [(1, (1, 2, 1)), (-1, (1, 1, 1))]),
    ((1, 2), (2, 2), [(1, (2, 1, 2)), (-1, (1, 2, 2)), (1, (2, 1, 1)), (1, (1, 2, 1)), (-1, (1, 1, 2))]),
    ((2, 1), (2, 1), [(-2, (1, 2, 1))]),
    ((2, 1), (2, 2), [(1, (2, 1, 1)), (-2, (1, 2, 1)), (1, (2, 2, 1)), (-1, (1, 2, 2))]),
    ((2, 2), (2, 2), [(2, (2, 1, 2)), (-4, (1, 2, 2)), (2, (2, 2, 1))]),
]


@pytest.mark.criterion(2, "ten tensor brackets on ALG2 by both routes")
def test_criterion_2_tensor_brackets():
    g = alg2()
    for P, Q, terms in TABLE:
        want = combo(terms)
        assert (tensor_bracket(g, basis(*P), basis(*Q)) == want).all(), (P, Q)
        assert (tensor_bracket_22_closed(g, basis(*P), basis(*Q)) == want).all(), (P, Q)


@pytest.mark.criterion(3, "r-matrix families solve; e2⊗e2 residual")
def test_criterion_3_r_matrix_families():
    g = alg2()
    for a, b in itertools.product(range(-2, 3), repeat=2):
        r = a * basis(1, 1) + b * (basis(1, 2) + basis(2, 1))
        assert check_clybe(RMatrix(g, r), route="both").holds
    for c in (-2, -1, 1, 2):
        r = c * (basis(1, 1) - basis(1, 2) - basis(2, 1) + basis(2, 2))
        assert check_clybe(RMatrix(g, r), route="both").holds
    r = basis(2, 2)
    want = 2 * basis(2, 1, 2) - 4 * basis(1, 2, 2) + 2 * basis(2, 2, 1)
    assert (tensor_bracket(g, r, r) == want).all()
    assert (tensor_bracket_22_closed(g, r, r) == want).all()


def _three_verdicts(pair):
    n = pair.g.dim
    mp = standard_matched_pair(pair)
    G = bowtie_product(mp, verify=False)
    return (
        check_bialgebra(pair).holds,
        check_matched_pair(mp).holds,
        check_manin_triple(G, pairing_form(n, pair.g.field), SplitSignature(n, n)).holds,
    )


def _random_leibniz_f3(rng):
    while True:
        c = F3.array(np.array([rng.randrange(3) for _ in range(8)], dtype=object).reshape(2, 2, 2))
        h = LeibnizAlgebra(c, F3, check=False)
        if check_leibniz(h).holds:
            return h


@pytest.mark.criterion(4, "bialgebra, matched pair and Manin triple agree")
def test_criterion_4_tri_equivalence():
    tri = triangular_pair(RMatrix(alg2(), [[1, -1], [-1, 1]]))
    assert _three_verdicts(tri) == (True, True, True)
    rng = rng_from(2024)
    g = alg2(F3)
    seen = set()
    for _ in range(100):
        verdicts = _three_verdicts(BialgebraPair(g, _random_leibniz_f3(rng)))
        assert len(set(verdicts)) == 1
        seen.add(verdicts[0])
    assert seen == {True, False}


@pytest.mark.criterion(5, "self-bracket of an operator is twice its defect")
def test_criterion_5_sign_anchor():
    rng = rng_from(5)
    for _ in range(50):
        g = random_leibniz(rng, QQ, max_dim=3)
        rep = rng.choice([regular_representation(g), dual_reg(g)])
        n, m = g.dim, rep.dim
        K = QQ.random_array((n, m), rng, 3)
        sq = derived_bracket(rep, K.T, K.T)
        E = QQ.identity(m)
        for a, b in itertools.product(range(m), repeat=2):
            Ka, Kb = K[:, a], K[:, b]
            br = np.einsum("i,j,ijk->k", Ka, Kb, g.c)
            act = np.einsum("i,ipq,q->p", Ka, rep.rhoL, E[b]) + np.einsum("i,ipq,q->p", Kb, rep.rhoR, E[a])
            assert list(sq[a, b]) == list((br - K @ act) * 2)


def _intertwines(sa, tw, H):
    d1 = sa.sig.d1
    E = QQ.identity(sa.sig.dim)
    E[:d1, d1:] += QQ.array(H)
    lhs = np.einsum("kp,xyp->xyk", E, tw.algebra.c)
    rhs = np.einsum("ax,by,abk->xyk", E, E, sa.algebra.c)
    return (lhs == rhs).all()


@pytest.mark.criterion(6, "twisting by family operators; routes agree")
def test_criterion_6_twisting():
    g = alg2()
    rep = dual_reg(g)
    sa = SplitAlgebra(semidirect_product(rep), SplitSignature(2, 2))
    for K in FAMILY:
        tw = twist(sa, K)
        assert check_leibniz(tw.algebra).holds
        assert is_twilled(tw).holds
        assert tw.components()[3].is_zero()
        assert LeibnizAlgebra(tw.algebra.c[2:, 2:, 2:], QQ) == induced_bracket(rep, K)
        assert _intertwines(sa, tw, K)
    rng = rng_from(6)
    for _ in range(20):
        h = random_leibniz(rng, QQ, max_dim=4)
        while h.dim < 2:
            h = random_leibniz(rng, QQ, max_dim=4)
        d1 = rng.randint(1, h.dim - 1)
        sb = SplitAlgebra(h, SplitSignature(d1, h.dim - d1))
        H = QQ.random_array((d1, h.dim - d1), rng, 2)
        assert twist(sb, H).algebra == twist_by_expansion(sb, H).algebra


def _dim4_candidates(rng):
    fb = LeibnizAlgebra.from_brackets
    two = [
        alg2(F3),
        LeibnizAlgebra.abelian(2, F3),
        fb(2, {(1, 2): {2: 1}, (2, 1): {2: -1}}, F3),
        fb(2, {(1, 1): {2: 1}}, F3),
    ]
    while True:
        if rng.random() < 0.3:
            g = rng.choice(two)
        else:
            g = direct_sum(rng.choice(two), rng.choice(two))
        yield change_basis(g, random_invertible(g.dim, F3, rng))


def _skew_forms(n):
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for entries in itertools.product(range(3), repeat=len(slots)):
        W = F3.zeros((n, n))
        for (i, j), v in zip(slots, entries):
            W[i, j], W[j, i] = F3(v), F3(-v)
        yield W


@pytest.mark.criterion(7, "Cartan 3-tensor is a cocycle")
def test_criterion_7_cartan_cocycle():
    G, W, _ = standard_manin_triple(alg2())
    qs = QuadraticStructure(G, W)
    assert (coboundary_of_3cochain(G, cartan_tensor(qs)) == 0).all()

    rng = rng_from(7)
    found = []
    for g in _dim4_candidates(rng):
        forms = []
        for W in _skew_forms(g.dim):
            q = QuadraticStructure(g, W)
            if check_quadratic(q).holds:
                forms.append(q)
        if forms:
            found.append(rng.choice(forms))
        if len(found) == 5:
            break
    assert any(not (q.algebra.c == 0).all() for q in found)
    for q in found:
        assert (coboundary_of_3cochain(q.algebra, cartan_tensor(q)) == 0).all()


@pytest.mark.criterion(8, "solutions from operators and from dendriform algebras")
def test_criterion_8_pipeline():
    rep = dual_reg(alg2())
    for K in FAMILY:
        big, rm = solution_from_relative_rb(rep, K)
        assert rm.symmetric and check_clybe(rm).holds
    for m in (1, 2):
        A = omni_lie(m)
        d = A.dim
        big, rm = canonical_r(A)
        assert rm.symmetric and check_clybe(rm).holds
        pairing = QQ.zeros((2 * d, 2 * d))
        pairing[:d, d:] = QQ.identity(d)
        pairing[d:, :d] = QQ.identity(d)
        B, report = closed_form_from_r(rm)
        assert (B == pairing).all() and report.holds


@pytest.mark.criterion(9, "graded Lie identities of the bracket on cochains")
def test_criterion_9_graded_lie():
    rng = rng_from(9)
    br = balavoine_bracket
    for _ in range(100):
        d = rng.randint(1, 3)
        arities = rng.choice([t for t in itertools.product((1, 2, 3), repeat=3) if sum(t) <= 6])
        P, Q, R = (MultilinearMap(random_map(d, a, QQ, rng)) for a in arities)
        p, q = P.degree, Q.degree
        assert br(P, Q) == br(Q, P) * (-((-1) ** (p * q)))
        assert br(P, br(Q, R)) == br(br(P, Q), R) + br(Q, br(P, R)) * ((-1) ** (p * q))
    for _ in range(100):
        sig = SplitSignature(rng.randint(1, 2), rng.randint(1, 2))
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        lf, lg = rng.randint(-1, a), rng.randint(-1, b)
        f = homogeneous_part(MultilinearMap(random_map(sig.dim, a, QQ, rng)), sig, (lf, a - 1 - lf))
        g = homogeneous_part(MultilinearMap(random_map(sig.dim, b, QQ, rng)), sig, (lg, b - 1 - lg))
        out = br(f, g)
        if lf == lg == -1:
            assert out.is_zero()
        else:
            assert out.is_zero() or bidegree(out, sig) == Bidegree(lf + lg, a + b - 2 - lf - lg)


@pytest.mark.criterion(10, "symmetric solutions over F_5 match operators pointwise")
def test_criterion_10_bridge():
    g = alg2(F5)
    rep = dual_reg(g)
    count = 0
    for a, b, c in itertools.product(range(5), repeat=3):
        K = F5.array([[a, b], [b, c]])
        verdict = check_clybe(r_from_operator(g, K)).holds
        assert verdict == check_relative_rb(rep, K).holds, (a, b, c)
        count += 1
    assert count == 125
