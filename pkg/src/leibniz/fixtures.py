"""Canonical data files: the two-dimensional algebra with ``[e2,e1] = [e2,e2] = e1``
and the objects built on it.
"""

from __future__ import annotations

from pathlib import Path

from .algebra import LeibnizAlgebra, QuadraticStructure, dual_representation, regular_representation
from .bialgebra import standard_manin_triple
from .dendriform import omni_lie
from .errors import UnknownFixture
from .fields import QQ
from .io import (
    algebra_to_json,
    dendriform_to_json,
    dumps,
    operator_to_json,
    quadratic_to_json,
    rep_to_json,
    rmatrix_to_json,
)
from .yang_baxter import RMatrix

__all__ = ["FIXTURES", "alg2", "fixture", "fixture_text", "emit"]


def alg2(field=QQ) -> LeibnizAlgebra:
    return LeibnizAlgebra.from_brackets(2, {(2, 1): {1: 1}, (2, 2): {1: 1}}, field)


def _r(r):
    return rmatrix_to_json(RMatrix(alg2(), r))


def _manin():
    G, W, sig = standard_manin_triple(alg2())
    return quadratic_to_json(QuadraticStructure(G, W), d1=sig.d1)


FIXTURES = {
    "alg2": lambda: algebra_to_json(alg2()),
    "alg2-dualreg": lambda: rep_to_json(dual_representation(regular_representation(alg2()))),
    "r-family-i": lambda: _r([[2, 3], [3, 0]]),
    "r-family-ii": lambda: _r([[1, -1], [-1, 1]]),
    "r-e2e2": lambda: _r([[0, 0], [0, 1]]),
    "omni1": lambda: dendriform_to_json(omni_lie(1)),
    "manin-alg2": _manin,
    "k-family-i": lambda: operator_to_json(QQ.array([[1, 1], [1, 0]]), QQ),
    "k-family-ii": lambda: operator_to_json(QQ.array([[1, -1], [-1, 1]]), QQ),
    "k-family-iii": lambda: operator_to_json(QQ.array([[1, 0], [-1, 0]]), QQ),
}


def fixture(name: str) -> dict:
    try:
        build = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
    return build()


def fixture_text(name: str) -> str:
    return dumps(fixture(name), pretty=True) + "\n"


def filename(name: str) -> str:
    return name.replace("-", "_") + ".json"


def emit(name: str, directory=".") -> Path:
    """Write one fixture file and return its path."""
    text = fixture_text(name)
    path = Path(directory) / filename(name)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return path
