from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from leibniz import QQ, PrimeField, Residue, scalar_arithmetic
from leibniz.errors import (
    DivisionByZero,
    GuardRailExceeded,
    InputError,
    MixedFieldContext,
    ShapeMismatch,
    SingularMatrix,
)
from leibniz.fields import field_from_json, is_prime
from leibniz.tensors import check_allocation, mat_inverse, rank, swap_slots, tensor_contract

F5 = PrimeField(5)
rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


def test_rational_addition():
    assert scalar_arithmetic(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)


def test_inverse_in_f5():
    assert scalar_arithmetic(F5(3), op="inv") == F5(2)


def test_canonical_equality():
    assert scalar_arithmetic(QQ.parse("2/4"), QQ.parse("1/2"), "eq")
    assert QQ.format(QQ.parse("2/4")) == "1/2"
    assert QQ.format(QQ.parse("-6/3")) == "-2"
    assert QQ.format(QQ.parse("0/7")) == "0"


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        scalar_arithmetic(Fraction(1), Fraction(0), "div")
    with pytest.raises(DivisionByZero):
        scalar_arithmetic(F5(0), op="inv")
    with pytest.raises(DivisionByZero):
        QQ.parse("1/0")


def test_mixed_contexts():
    with pytest.raises(MixedFieldContext):
        scalar_arithmetic(F5(1), PrimeField(7)(1), "add")
    with pytest.raises(MixedFieldContext):
        scalar_arithmetic(F5(1), Fraction(1, 2), "add")
    with pytest.raises(MixedFieldContext):
        F5(Fraction(1, 2))


def test_prime_field_parsing():
    assert F5.parse("7") == F5(2)
    assert F5.parse("1/2") == F5(3)
    assert F5.format(F5.parse("-1")) == "4"
    with pytest.raises(InputError):
        PrimeField(6)
    with pytest.raises(InputError):
        QQ.parse("0.5")
    with pytest.raises(InputError):
        QQ(0.5)


def test_field_descriptors():
    assert field_from_json({"kind": "rational"}) == QQ
    assert field_from_json({"kind": "prime", "p": 5}) == F5
    assert field_from_json(None) == QQ
    with pytest.raises(InputError):
        field_from_json({"kind": "complex"})


def test_is_prime_small():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    a, b, c = QQ(a), QQ(b), QQ(c)
    assert QQ.parse(QQ.format(a)) == a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * scalar_arithmetic(a, op="inv") == 1


@given(st.sampled_from([2, 3, 5, 7, 101]), st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, x, y, z):
    F = PrimeField(p)
    a, b, c = F(x), F(y), F(z)
    assert 0 <= a.value < p
    assert F.parse(F.format(a)) == a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * a.inverse() == F.one
    assert isinstance(a - b, Residue)


def test_mat_inverse_examples():
    assert (mat_inverse(QQ.identity(2)) == QQ.identity(2)).all()
    inv = mat_inverse(QQ.array([[1, 1], [1, 0]]))
    assert (inv == QQ.array([[0, 1], [1, -1]])).all()
    with pytest.raises(SingularMatrix) as exc:
        mat_inverse(QQ.array([[1, 1], [1, 1]]))
    assert exc.value.rank == 1
    with pytest.raises(ShapeMismatch):
        mat_inverse(QQ.array([[1, 2, 3]]))


@given(st.integers(1, 6), st.integers(0, 10**6), st.sampled_from(["Q", 3, 7]))
def test_mat_inverse_roundtrip(n, seed, fld):
    import random

    field = QQ if fld == "Q" else PrimeField(fld)
    rng = random.Random(seed)
    M = field.random_array((n, n), rng, 3)
    if rank(M) < n:
        with pytest.raises(SingularMatrix):
            mat_inverse(M)
        return
    inv = mat_inverse(M)
    ident = field.identity(n)
    assert ((M @ inv) == ident).all()
    assert ((inv @ M) == ident).all()


def test_tensor_contract_examples():
    e12 = QQ.zeros((2, 2))
    e12[0, 1] = QQ.one
    swap = QQ.array([[0, 1], [1, 0]])
    out = tensor_contract(e12, swap, 0)
    expected = QQ.zeros((2, 2))
    expected[1, 1] = QQ.one
    assert (out == expected).all()
    flipped = swap_slots(e12)
    assert flipped[1, 0] == 1 and flipped[0, 1] == 0
    with pytest.raises(ShapeMismatch):
        tensor_contract(e12, QQ.identity(3), 0)
    with pytest.raises(ShapeMismatch):
        tensor_contract(e12, swap, 2)


@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def test_tensor_contract_identity(order, dim, seed):
    import random

    T = QQ.random_array((dim,) * order, random.Random(seed))
    for slot in range(order):
        assert (tensor_contract(T, QQ.identity(dim), slot) == T).all()


def test_tensor_contract_is_linear():
    import random

    rng = random.Random(4)
    T1 = QQ.random_array((3, 3, 3), rng)
    T2 = QQ.random_array((3, 3, 3), rng)
    M = QQ.random_array((3, 3), rng)
    lhs = tensor_contract(T1 * 2 + T2, M, 1)
    rhs = tensor_contract(T1, M, 1) * 2 + tensor_contract(T2, M, 1)
    assert (lhs == rhs).all()


def test_guard_rail(monkeypatch):
    check_allocation((10, 10))
    monkeypatch.setenv("LEIBNIZ_GUARD_MAX_COEFFS", "50")
    with pytest.raises(GuardRailExceeded):
        QQ.zeros((10, 10))
    monkeypatch.delenv("LEIBNIZ_GUARD_MAX_COEFFS")
    with pytest.raises(GuardRailExceeded):
        check_allocation((10,) * 8)


def test_arrays_are_object_dtype():
    a = F5.array([[1, 2], [3, 4]])
    assert a.dtype == object
    assert np.all([isinstance(x, Residue) for x in a.flat])
