"""Multilinear maps on a based space and the Balavoine graded Lie bracket.

A map of arity ``n`` on a ``d``-dimensional space is stored as an object
array of shape ``(d,)*n + (d,)``: the last axis holds the output
coefficients. Its graded degree is ``n - 1``.
"""

from __future__ import annotations

import enum
import itertools
from typing import NamedTuple

import numpy as np

from .errors import CarrierMismatch, GuardRailExceeded, InputError, ShapeMismatch
from .fields import QQ, Field
from .tensors import arrays_equal, check_allocation, is_zero

__all__ = [
    "MultilinearMap",
    "SplitSignature",
    "Bidegree",
    "Homogeneity",
    "shuffles",
    "permutation_sign",
    "balavoine_bracket",
    "is_maurer_cartan",
    "lift",
    "bidegree",
    "homogeneous_part",
    "decompose_bidegree",
]

MAX_BRACKET_ORDER = 6
MAX_BRACKET_DIM = 8


class MultilinearMap:
    """``f(e_{i1}, ..., e_{in}) = sum_j T[i1, ..., in, j] e_j``."""

    __slots__ = ("T", "field")

    def __init__(self, coeffs, field: Field = QQ):
        T = field.array(coeffs)
        if T.ndim < 2 or len(set(T.shape)) != 1:
            raise ShapeMismatch(f"coefficients must have shape (d,)*(n+1), got {T.shape}")
        if T.shape[0] == 0:
            raise InputError("carrier dimension must be at least 1")
        T.flags.writeable = False
        self.T = T
        self.field = field

    @classmethod
    def _wrap(cls, T: np.ndarray, field: Field) -> MultilinearMap:
        obj = cls.__new__(cls)
        T = np.array(T, dtype=object, copy=True)
        T.flags.writeable = False
        obj.T = T
        obj.field = field
        return obj

    @classmethod
    def zero(cls, dim: int, arity: int, field: Field = QQ) -> MultilinearMap:
        return cls._wrap(field.zeros((dim,) * (arity + 1)), field)

    @classmethod
    def from_algebra(cls, algebra) -> MultilinearMap:
        return cls._wrap(algebra.c, algebra.field)

    @property
    def dim(self) -> int:
        return self.T.shape[0]

    @property
    def arity(self) -> int:
        return self.T.ndim - 1

    @property
    def degree(self) -> int:
        return self.T.ndim - 2

    def __call__(self, *vectors) -> np.ndarray:
        if len(vectors) != self.arity:
            raise ShapeMismatch(f"expected {self.arity} arguments, got {len(vectors)}")
        out = self.T
        for v in vectors:
            out = np.tensordot(np.asarray(v, dtype=object), out, axes=([0], [0]))
        return out

    def is_zero(self) -> bool:
        return is_zero(self.T)

    def _check(self, other: MultilinearMap) -> None:
        if self.T.shape != other.T.shape:
            raise CarrierMismatch(f"shapes differ: {self.T.shape} vs {other.T.shape}")

    def __add__(self, other):
        if not isinstance(other, MultilinearMap):
            return NotImplemented
        self._check(other)
        return MultilinearMap._wrap(self.T + other.T, self.field)

    def __sub__(self, other):
        if not isinstance(other, MultilinearMap):
            return NotImplemented
        self._check(other)
        return MultilinearMap._wrap(self.T - other.T, self.field)

    def __neg__(self):
        return MultilinearMap._wrap(-self.T, self.field)

    def __mul__(self, scalar):
        if isinstance(scalar, MultilinearMap):
            return NotImplemented
        return MultilinearMap._wrap(self.T * scalar, self.field)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MultilinearMap):
            return NotImplemented
        return arrays_equal(self.T, other.T)

    def __hash__(self):
        return hash((self.T.shape, tuple(self.T.flat)))

    def __repr__(self):
        return f"MultilinearMap(dim={self.dim}, arity={self.arity})"


class SplitSignature(NamedTuple):
    """``g1 ⊕ g2`` where the first ``d1`` basis vectors span ``g1``."""

    d1: int
    d2: int

    @property
    def dim(self) -> int:
        return self.d1 + self.d2

    def validate(self) -> SplitSignature:
        if self.d1 < 0 or self.d2 < 0 or self.d1 + self.d2 < 1:
            raise InputError(f"invalid split {self.d1}+{self.d2}")
        return self

    def block(self, part: int) -> slice:
        if part == 1:
            return slice(0, self.d1)
        if part == 2:
            return slice(self.d1, self.d1 + self.d2)
        raise InputError(f"summand index must be 1 or 2, got {part}")


class Bidegree(NamedTuple):
    l: int
    k: int

    def __str__(self):
        return f"{self.l}|{self.k}"


class Homogeneity(enum.Enum):
    NOT_HOMOGENEOUS = "not-homogeneous"
    ZERO = "zero"  # the zero map has every bidegree of its arity


def permutation_sign(perm) -> int:
    """Sign by inversion count."""
    inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inv % 2 else 1


def shuffles(i: int, j: int) -> list[tuple[tuple[int, ...], int]]:
    """All (i, j)-shuffles as ``(σ(1), ..., σ(i+j))`` with their signs.

    Ordered lexicographically by the first block.
    """
    if i < 0 or j < 0:
        raise InputError("shuffle block sizes must be non-negative")
    n = i + j
    out = []
    for first in itertools.combinations(range(1, n + 1), i):
        rest = tuple(x for x in range(1, n + 1) if x not in first)
        perm = first + rest
        out.append((perm, permutation_sign(perm)))
    return out


def _insert(P: np.ndarray, Q: np.ndarray, k: int) -> np.ndarray:
    """C(y_1..y_N) = P(y_1..y_{k-1}, Q(y_k..y_{k+q}), y_{k+q+1}..) as an array."""
    qa = Q.ndim - 1
    # axes: Q inputs, then P's axes with slot k-1 removed
    comp = np.tensordot(Q, P, axes=([qa], [k - 1]))
    n_before = k - 1
    order = list(range(qa, qa + n_before)) + list(range(qa)) + list(range(qa + n_before, comp.ndim))
    return np.transpose(comp, order)


def _circ_k(P: np.ndarray, Q: np.ndarray, k: int) -> np.ndarray:
    q = Q.ndim - 2
    C = _insert(P, Q, k)
    N = C.ndim - 1
    total = None
    for perm, sign in shuffles(k - 1, q):
        sigma = [s - 1 for s in perm] + list(range(len(perm), N))
        inv = [0] * N
        for t, s in enumerate(sigma):
            inv[s] = t
        # R[i_1..i_N] = C[i_{σ(1)}, ..., i_{σ(N)}]
        term = np.transpose(C, inv + [N])
        term = term if sign == 1 else -term
        total = term if total is None else total + term
    return total


def _circ_bar(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    p, q = P.ndim - 2, Q.ndim - 2
    total = None
    for k in range(1, p + 2):
        term = _circ_k(P, Q, k)
        if (k - 1) * q % 2:
            term = -term
        total = term if total is None else total + term
    return total


def balavoine_bracket(P: MultilinearMap, Q: MultilinearMap) -> MultilinearMap:
    """Graded Lie bracket ``[P, Q] = P∘̄Q - (-1)^{pq} Q∘̄P`` (p, q the degrees)."""
    if P.dim != Q.dim:
        raise CarrierMismatch(f"carrier dimensions differ: {P.dim} vs {Q.dim}")
    if P.arity + Q.arity > MAX_BRACKET_ORDER or P.dim > MAX_BRACKET_DIM:
        raise GuardRailExceeded(
            f"bracket of arities {P.arity}+{Q.arity} on dimension {P.dim} exceeds the dense limits "
            f"(arity sum <= {MAX_BRACKET_ORDER}, dimension <= {MAX_BRACKET_DIM})"
        )
    check_allocation((P.dim,) * (P.arity + Q.arity))
    p, q = P.degree, Q.degree
    first = _circ_bar(P.T, Q.T)
    second = _circ_bar(Q.T, P.T)
    out = first - second if (p * q) % 2 == 0 else first + second
    return MultilinearMap._wrap(out, P.field)


def is_maurer_cartan(mu: MultilinearMap) -> bool:
    if mu.arity != 2:
        raise InputError("a Maurer-Cartan candidate must be bilinear")
    return balavoine_bracket(mu, mu).is_zero()


def lift(f, sig: SplitSignature, source_pattern, target: int, field: Field = QQ) -> MultilinearMap:
    """Horizontal lift of ``f: g_{i(1)} ⊗ ... ⊗ g_{i(n)} -> g_j``; zero on other summands."""
    sig = SplitSignature(*sig).validate()
    F = field.array(f)
    pattern = tuple(source_pattern)
    dims = tuple(sig.d1 if s == 1 else sig.d2 for s in pattern) + (sig.d1 if target == 1 else sig.d2,)
    if not pattern or any(s not in (1, 2) for s in pattern) or target not in (1, 2):
        raise InputError("source pattern and target must use summand labels 1 and 2")
    if F.shape != dims:
        raise ShapeMismatch(f"expected coefficient shape {dims}, got {F.shape}")
    T = field.zeros((sig.dim,) * (len(pattern) + 1))
    T[tuple(sig.block(s) for s in pattern + (target,))] = F
    return MultilinearMap._wrap(T, field)


def _blocks(arity: int):
    return itertools.product((1, 2), repeat=arity)


def bidegree(f: MultilinearMap, sig: SplitSignature) -> Bidegree | Homogeneity:
    sig = SplitSignature(*sig).validate()
    if f.dim != sig.dim:
        raise CarrierMismatch(f"map lives on dimension {f.dim}, split has {sig.dim}")
    n = f.arity
    found = set()
    for pattern in _blocks(n):
        ones = pattern.count(1)
        for target in (1, 2):
            block = f.T[tuple(sig.block(s) for s in pattern + (target,))]
            if block.size and not is_zero(block):
                found.add(Bidegree(ones - 1, n - ones) if target == 1 else Bidegree(ones, n - ones - 1))
    if not found:
        return Homogeneity.ZERO
    if len(found) > 1:
        return Homogeneity.NOT_HOMOGENEOUS
    return found.pop()


def homogeneous_part(f: MultilinearMap, sig: SplitSignature, bideg) -> MultilinearMap:
    """Component of ``f`` of bidegree ``bideg`` (zero if absent)."""
    l, k = bideg
    sig = SplitSignature(*sig).validate()
    n = f.arity
    if l + k + 1 != n:
        return MultilinearMap.zero(f.dim, n, f.field)
    T = f.field.zeros(f.T.shape)
    for pattern in _blocks(n):
        ones = pattern.count(1)
        if ones == l + 1:
            target = 1
        elif ones == l:
            target = 2
        else:
            continue
        idx = tuple(sig.block(s) for s in pattern + (target,))
        T[idx] = f.T[idx]
    return MultilinearMap._wrap(T, f.field)


def decompose_bidegree(omega: MultilinearMap, sig: SplitSignature):
    """Split a bilinear map into its parts of bidegree 2|-1, 1|0, 0|1, -1|2."""
    if omega.arity != 2:
        raise InputError("decomposition is defined for bilinear maps")
    return tuple(homogeneous_part(omega, sig, b) for b in ((2, -1), (1, 0), (0, 1), (-1, 2)))
