"""Exact scalar fields: the rationals (via :class:`fractions.Fraction`) and
prime fields F_p (via :class:`Residue`).

Algebra code never branches on the field. It uses ordinary Python operators
on whatever elements the field hands out, with plain ``int`` literals
allowed as coefficients. Mixing a ``Fraction`` with a ``Residue``, or two
residues with different moduli, raises :class:`MixedFieldContext`.
"""

from __future__ import annotations

import operator
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

import numpy as np

from .errors import DivisionByZero, InputError, MixedFieldContext

__all__ = [
    "Field",
    "Rationals",
    "PrimeField",
    "Residue",
    "QQ",
    "field_of",
    "is_prime",
    "scalar_arithmetic",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@total_ordering
class Residue:
    """An element of F_p. Immutable; ``value`` is always in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("Residue is immutable")

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise MixedFieldContext(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, bool):
            return int(other)
        if isinstance(other, int):
            return other
        if isinstance(other, (Fraction, float)):
            raise MixedFieldContext(f"cannot mix F_{self.p} with {type(other).__name__}")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> Residue:
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) * self.inverse()

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value == o % self.p

    def __lt__(self, other):
        # Ordering by representative in [0, p); used only for deterministic sorting.
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value < o % self.p

    def __hash__(self):
        return hash((self.value, self.p))

    def __reduce__(self):
        return (Residue, (self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Common interface of the two scalar fields."""

    kind: str

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        raise NotImplementedError

    def parse(self, s) -> object:
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def characteristic(self) -> int:
        raise NotImplementedError

    # dense arrays -------------------------------------------------------

    def array(self, data) -> np.ndarray:
        """Convert nested sequences (or an ndarray) into an object array of field elements."""
        a = np.array(data, dtype=object)
        if a.ndim == 0:
            return np.array(self(a.item()), dtype=object)
        out = np.empty(a.shape, dtype=object)
        for idx, v in np.ndenumerate(a):
            out[idx] = self(v)
        return out

    def zeros(self, shape) -> np.ndarray:
        from .tensors import check_allocation

        check_allocation(shape)
        return np.full(shape, self.zero, dtype=object)

    def identity(self, n: int) -> np.ndarray:
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i] = self.one
        return a

    def random(self, rng: random.Random, bound: int = 3):
        raise NotImplementedError

    def random_array(self, shape, rng: random.Random, bound: int = 3) -> np.ndarray:
        a = self.zeros(shape)
        for idx in np.ndindex(*a.shape):
            a[idx] = self.random(rng, bound)
        return a


@dataclass(frozen=True)
class Rationals(Field):
    kind = "rational"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, Residue):
            raise MixedFieldContext("cannot coerce an F_p residue to a rational")
        if isinstance(x, bool):
            return Fraction(int(x))
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise InputError("floating point scalars are not accepted; use 'p/q' strings")
        raise InputError(f"cannot interpret {x!r} as a rational")

    def parse(self, s):
        if isinstance(s, int) and not isinstance(s, bool):
            return Fraction(s)
        if not isinstance(s, str):
            raise InputError(f"scalar must be a string, got {s!r}")
        m = _RATIONAL_RE.match(s)
        if not m:
            raise InputError(f"bad rational scalar {s!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise DivisionByZero(f"zero denominator in {s!r}")
        return Fraction(num, den)

    def format(self, x):
        x = self(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def to_json(self):
        return {"kind": "rational"}

    def characteristic(self):
        return 0

    def random(self, rng, bound=3):
        num = rng.randint(-bound, bound)
        den = rng.choice((1, 1, 1, 2, 3))
        return Fraction(num, den)

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int
    kind = "prime"

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise InputError(f"modulus {self.p!r} is not prime")

    def __call__(self, x):
        if isinstance(x, Residue):
            if x.p != self.p:
                raise MixedFieldContext(f"cannot mix F_{self.p} and F_{x.p}")
            return x
        if isinstance(x, bool):
            return Residue(int(x), self.p)
        if isinstance(x, int):
            return Residue(x, self.p)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            raise MixedFieldContext("cannot coerce a rational to an F_p residue implicitly")
        if isinstance(x, float):
            raise InputError("floating point scalars are not accepted")
        raise InputError(f"cannot interpret {x!r} as an element of F_{self.p}")

    def parse(self, s):
        if isinstance(s, int) and not isinstance(s, bool):
            return Residue(s, self.p)
        if not isinstance(s, str):
            raise InputError(f"scalar must be a string, got {s!r}")
        m = _RATIONAL_RE.match(s)
        if not m:
            raise InputError(f"bad F_{self.p} scalar {s!r}")
        num = Residue(int(m.group(1)), self.p)
        if m.group(2) is not None:
            num = num / Residue(int(m.group(2)), self.p)
        return num

    def format(self, x):
        return str(self(x).value)

    def to_json(self):
        return {"kind": "prime", "p": self.p}

    def characteristic(self):
        return self.p

    def elements(self):
        return [Residue(v, self.p) for v in range(self.p)]

    def random(self, rng, bound=None):
        return Residue(rng.randrange(self.p), self.p)

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def field_from_json(obj) -> Field:
    if obj is None:
        return QQ
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InputError(f"bad field descriptor {obj!r}")
    if obj["kind"] == "rational":
        return QQ
    if obj["kind"] == "prime":
        if "p" not in obj:
            raise InputError("prime field descriptor needs 'p'")
        return PrimeField(int(obj["p"]))
    raise InputError(f"unknown field kind {obj['kind']!r}")


def field_of(x) -> Field:
    if isinstance(x, Residue):
        return PrimeField(x.p)
    if isinstance(x, (Fraction, int)):
        return QQ
    raise InputError(f"{x!r} is not a field element")


_BINARY = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
    "eq": operator.eq,
}


def scalar_arithmetic(a, b=None, op: str = "add"):
    """Apply one field operation; ``neg`` and ``inv`` ignore ``b``."""
    if op == "neg":
        return -a
    if op == "inv":
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return a.inverse() if isinstance(a, Residue) else 1 / Fraction(a)
    if op not in _BINARY:
        raise InputError(f"unknown scalar operation {op!r}")
    if isinstance(a, Residue) or isinstance(b, Residue):
        if not (isinstance(a, Residue) and isinstance(b, Residue)) or a.p != b.p:
            raise MixedFieldContext("operands live in different fields")
    elif isinstance(a, Fraction) != isinstance(b, Fraction) and not (
        isinstance(a, int) or isinstance(b, int)
    ):
        raise MixedFieldContext("operands live in different fields")
    if op == "div" and b == 0:
        raise DivisionByZero("division by zero")
    return _BINARY[op](a, b)
