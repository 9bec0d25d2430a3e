"""Test data: a catalog of small Leibniz algebras and random isomorphic copies."""

import random

import numpy as np

from leibniz import QQ, LeibnizAlgebra, dual_representation, regular_representation
from leibniz.errors import SingularMatrix
from leibniz.tensors import mat_inverse


def alg2(field=QQ):
    return LeibnizAlgebra.from_brackets(2, {(2, 1): {1: 1}, (2, 2): {1: 1}}, field)


def dual_reg(g):
    return dual_representation(regular_representation(g))


def _catalog(field):
    fb = LeibnizAlgebra.from_brackets
    return [
        alg2(field),
        LeibnizAlgebra.abelian(1, field),
        LeibnizAlgebra.abelian(2, field),
        fb(2, {(1, 2): {2: 1}, (2, 1): {2: -1}}, field),  # non-abelian Lie
        fb(2, {(1, 1): {2: 1}}, field),  # nilpotent, [e1,e1] = e2
        fb(3, {(1, 1): {3: 1}, (1, 2): {3: 2}, (2, 1): {3: -1}}, field),  # central extension
        fb(3, {(1, 2): {2: 1}, (2, 1): {2: -1}, (1, 3): {3: 1}}, field),  # Lie algebra acting on a line, left only
        fb(3, {(2, 1): {1: 1}, (2, 2): {1: 1}}, field),  # plus a trivial summand
        fb(3, {(1, 2): {3: 1}, (2, 1): {3: -1}}, field),  # Heisenberg
        fb(3, {(1, 2): {2: 2}, (2, 1): {2: -2}, (1, 3): {3: -2}, (3, 1): {3: 2}, (2, 3): {1: 1}, (3, 2): {1: -1}}, field),  # sl2
    ]



def catalog(field=QQ, max_dim=3):
    return [g for g in _catalog(field) if g.dim <= max_dim]


def change_basis(g, P):
    """Structure constants in the basis ``f_i = Σ_a P[a, i] e_a``."""
    P = g.field.array(P)
    Pinv = mat_inverse(P)
    c = np.einsum("ai,bj,abm,km->ijk", P, P, g.c, Pinv)
    return LeibnizAlgebra(c, g.field)


def random_invertible(n, field, rng, bound=2):
    while True:
        P = field.random_array((n, n), rng, bound)
        try:
            mat_inverse(P)
            return P
        except SingularMatrix:
            continue


def random_leibniz(rng, field=QQ, max_dim=3):
    g = rng.choice(catalog(field, max_dim))
    return change_basis(g, random_invertible(g.dim, field, rng))


def random_map(dim, arity, field, rng, bound=2):
    return field.random_array((dim,) * (arity + 1), rng, bound)


def rng_from(seed):
    return random.Random(seed)
