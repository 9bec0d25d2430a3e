"""JSON interchange for algebras, representations, maps and reports.

Scalars are always strings in canonical form and basis indices are 1-based.
Objects that refer to an algebra may embed it or name a file relative to
their own location.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .algebra import LeibnizAlgebra, QuadraticStructure, Representation
from .bialgebra import BialgebraPair
from .cochain import MultilinearMap, SplitSignature
from .dendriform import DendriformAlgebra
from .errors import InputError, ShapeMismatch
from .fields import Field, field_from_json
from .twilled import SplitAlgebra
from .yang_baxter import RMatrix

__all__ = [
    "dumps",
    "read_json",
    "algebra_to_json",
    "algebra_from_json",
    "rep_to_json",
    "rep_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "operator_to_json",
    "operator_from_json",
    "map_to_json",
    "map_from_json",
    "multilinear_from_json",
    "tensor_to_json",
    "tensor_from_json",
    "rmatrix_to_json",
    "rmatrix_from_json",
    "quadratic_to_json",
    "quadratic_from_json",
    "manin_from_json",
    "split_to_json",
    "split_from_json",
    "bialgebra_to_json",
    "bialgebra_from_json",
    "dendriform_to_json",
    "dendriform_from_json",
]


def dumps(obj, pretty: bool = False) -> str:
    """Deterministic serialization: sorted keys, no insignificant whitespace."""
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def read_json(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected a JSON object")
    return obj


def _get(obj: dict, key: str, what: str):
    if not isinstance(obj, dict):
        raise InputError(f"{what} must be a JSON object")
    if key not in obj:
        raise InputError(f"{what} is missing '{key}'")
    return obj[key]


def _int(value, what: str, lo: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < lo:
        raise InputError(f"{what} must be an integer >= {lo}, got {value!r}")
    return value


def _index(value, dim: int, what: str) -> int:
    i = _int(value, what, 1)
    if i > dim:
        raise InputError(f"{what} = {i} is out of range 1..{dim}")
    return i - 1


def _field(obj: dict, override: Field | None) -> Field:
    return override if override is not None else field_from_json(obj.get("field"))


def _resolve(ref, base: Path | None, field: Field | None) -> LeibnizAlgebra:
    if isinstance(ref, LeibnizAlgebra):
        return ref
    if isinstance(ref, str):
        path = Path(ref) if base is None else base / ref
        return algebra_from_json(read_json(path), field)
    return algebra_from_json(ref, field)


# structure constants ------------------------------------------------------


def _entries_to_json(c: np.ndarray, field: Field) -> list:
    out = []
    n = c.shape[0]
    for i in range(n):
        for j in range(n):
            row = {str(k + 1): field.format(v) for k, v in enumerate(c[i, j]) if v != 0}
            if row:
                out.append({"i": i + 1, "j": j + 1, "out": row})
    return out


def _entries_from_json(entries, n: int, field: Field, what: str) -> np.ndarray:
    if not isinstance(entries, list):
        raise InputError(f"{what} must be a list")
    c = field.zeros((n, n, n))
    for e in entries:
        i = _index(_get(e, "i", what), n, f"{what} index i")
        j = _index(_get(e, "j", what), n, f"{what} index j")
        out = _get(e, "out", what)
        if not isinstance(out, dict):
            raise InputError(f"{what} 'out' must be an object")
        for k, v in out.items():
            try:
                kk = int(k)
            except ValueError:
                raise InputError(f"{what} output key {k!r} is not an index") from None
            c[i, j, _index(kk, n, f"{what} output index")] = field.parse(v)
    return c


def algebra_to_json(g: LeibnizAlgebra) -> dict:
    return {"field": g.field.to_json(), "dim": g.dim, "brackets": _entries_to_json(g.c, g.field)}


def algebra_from_json(obj: dict, field: Field | None = None, *, check: bool = True) -> LeibnizAlgebra:
    """With ``check`` the Leibniz identity is enforced (:class:`InvalidAlgebra`)."""
    f = _field(obj, field)
    n = _int(_get(obj, "dim", "algebra"), "dim", 1)
    c = _entries_from_json(obj.get("brackets", []), n, f, "bracket entry")
    return LeibnizAlgebra(c, f, check=check)


# matrices and operators ---------------------------------------------------


def matrix_to_json(M: np.ndarray, field: Field) -> list:
    return [[field.format(v) for v in row] for row in np.asarray(M, dtype=object)]


def matrix_from_json(rows, field: Field, shape: tuple[int, int] | None = None) -> np.ndarray:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("matrix must be a list of rows")
    if rows and len({len(r) for r in rows}) != 1:
        raise ShapeMismatch("matrix rows have different lengths")
    M = np.array([[field.parse(v) for v in r] for r in rows], dtype=object).reshape(
        len(rows), len(rows[0]) if rows else 0
    )
    if shape is not None and M.shape != tuple(shape):
        raise ShapeMismatch(f"expected a {shape[0]}x{shape[1]} matrix, got {M.shape[0]}x{M.shape[1]}")
    return M


def operator_to_json(K: np.ndarray, field: Field) -> dict:
    return {"field": field.to_json(), "rows": K.shape[0], "cols": K.shape[1], "matrix": matrix_to_json(K, field)}


def operator_from_json(obj: dict, field: Field | None = None) -> np.ndarray:
    f = _field(obj, field)
    rows = _int(_get(obj, "rows", "operator"), "rows", 1)
    cols = _int(_get(obj, "cols", "operator"), "cols", 1)
    return matrix_from_json(_get(obj, "matrix", "operator"), f, (rows, cols))


# representations ------------------------------------------------------------


def rep_to_json(rep: Representation) -> dict:
    out = algebra_to_json(rep.algebra)
    out["carrier_dim"] = rep.dim
    out["rhoL"] = [matrix_to_json(M, rep.field) for M in rep.rhoL]
    out["rhoR"] = [matrix_to_json(M, rep.field) for M in rep.rhoR]
    return out


def rep_from_json(
    obj: dict, algebra: LeibnizAlgebra | None = None, field: Field | None = None, *, check: bool = True
) -> Representation:
    """Representation file; the algebra is read from the same object unless given."""
    if algebra is None:
        if "brackets" not in obj and "dim" not in obj:
            raise InputError("representation file carries no algebra; supply one")
        algebra = algebra_from_json(obj, field)
    elif "dim" in obj and obj["dim"] != algebra.dim:
        raise ShapeMismatch(f"representation is over dimension {obj['dim']}, algebra has {algebra.dim}")
    f = algebra.field
    m = _int(_get(obj, "carrier_dim", "representation"), "carrier_dim", 1)
    mats = {}
    for key in ("rhoL", "rhoR"):
        raw = _get(obj, key, "representation")
        if not isinstance(raw, list) or len(raw) != algebra.dim:
            raise ShapeMismatch(f"{key} must list {algebra.dim} matrices")
        mats[key] = np.array([matrix_from_json(M, f, (m, m)) for M in raw], dtype=object).reshape(algebra.dim, m, m)
    return Representation(algebra, mats["rhoL"], mats["rhoR"], check=check)


# multilinear maps and tensors ---------------------------------------------


def map_to_json(T: np.ndarray, field: Field) -> dict:
    """Coefficient array ``T[i_1..i_k, j]``; square shapes use ``dim``."""
    T = np.asarray(T, dtype=object)
    arity = T.ndim - 1
    in_dim, out_dim = T.shape[0], T.shape[-1]
    entries = []
    for idx in np.ndindex(*T.shape[:-1]):
        row = {str(j + 1): field.format(v) for j, v in enumerate(T[idx]) if v != 0}
        if row:
            entries.append({"in": [i + 1 for i in idx], "out": row})
    out = {"field": field.to_json(), "arity": arity, "entries": entries}
    if in_dim == out_dim:
        out["dim"] = in_dim
    else:
        out["in_dim"], out["out_dim"] = in_dim, out_dim
    return out


def map_from_json(obj: dict, field: Field | None = None) -> np.ndarray:
    f = _field(obj, field)
    arity = _int(_get(obj, "arity", "map"), "arity", 1)
    if "dim" in obj:
        in_dim = out_dim = _int(obj["dim"], "dim", 1)
    else:
        in_dim = _int(_get(obj, "in_dim", "map"), "in_dim", 1)
        out_dim = _int(_get(obj, "out_dim", "map"), "out_dim", 1)
    T = f.zeros((in_dim,) * arity + (out_dim,))
    for e in _get(obj, "entries", "map"):
        idx = _get(e, "in", "map entry")
        if not isinstance(idx, list) or len(idx) != arity:
            raise ShapeMismatch(f"map entry needs {arity} input indices, got {idx!r}")
        pos = tuple(_index(i, in_dim, "input index") for i in idx)
        for j, v in _get(e, "out", "map entry").items():
            T[pos + (_index(int(j), out_dim, "output index"),)] = f.parse(v)
    return T


def multilinear_from_json(obj: dict, field: Field | None = None) -> MultilinearMap:
    T = map_from_json(obj, field)
    if T.shape[0] != T.shape[-1]:
        raise ShapeMismatch("a multilinear map on one space needs equal input and output dimensions")
    return MultilinearMap(T, _field(obj, field))


def tensor_to_json(P: np.ndarray, field: Field) -> dict:
    P = np.asarray(P, dtype=object)
    entries = [
        {"index": [i + 1 for i in idx], "coeff": field.format(v)} for idx, v in np.ndenumerate(P) if v != 0
    ]
    return {"field": field.to_json(), "dim": P.shape[0], "order": P.ndim, "entries": entries}


def tensor_from_json(obj: dict, field: Field | None = None, base: Path | None = None) -> np.ndarray:
    """Tensor file, or an r-matrix file read as an order-2 tensor."""
    if "r" in obj:
        if "algebra" in obj:
            return rmatrix_from_json(obj, base=base).r
        n = _int(_get(obj, "dim", "r-matrix"), "dim", 1)
        return _r_entries(obj["r"], n, _field(obj, field))
    f = _field(obj, field)
    n = _int(_get(obj, "dim", "tensor"), "dim", 1)
    order = _int(_get(obj, "order", "tensor"), "order", 1)
    P = f.zeros((n,) * order)
    for e in _get(obj, "entries", "tensor"):
        idx = _get(e, "index", "tensor entry")
        if not isinstance(idx, list) or len(idx) != order:
            raise ShapeMismatch(f"tensor entry needs {order} indices, got {idx!r}")
        P[tuple(_index(i, n, "tensor index") for i in idx)] = f.parse(_get(e, "coeff", "tensor entry"))
    return P


# r-matrices ------------------------------------------------------------------


def _r_entries(entries, n: int, field: Field) -> np.ndarray:
    if not isinstance(entries, list):
        raise InputError("'r' must be a list of entries")
    r = field.zeros((n, n))
    for e in entries:
        i = _index(_get(e, "i", "r entry"), n, "r index i")
        j = _index(_get(e, "j", "r entry"), n, "r index j")
        r[i, j] = field.parse(_get(e, "coeff", "r entry"))
    return r


def rmatrix_to_json(rm: RMatrix, algebra_ref=None) -> dict:
    """``algebra_ref`` may be a file name to reference instead of embedding."""
    f = rm.algebra.field
    entries = [{"i": i + 1, "j": j + 1, "coeff": f.format(v)} for (i, j), v in np.ndenumerate(rm.r) if v != 0]
    return {"algebra": algebra_ref if algebra_ref is not None else algebra_to_json(rm.algebra), "r": entries}


def rmatrix_from_json(obj: dict, algebra: LeibnizAlgebra | None = None, base: Path | None = None) -> RMatrix:
    if algebra is None:
        algebra = _resolve(_get(obj, "algebra", "r-matrix"), base, None)
    return RMatrix(algebra, _r_entries(_get(obj, "r", "r-matrix"), algebra.dim, algebra.field))


# composite objects -----------------------------------------------------------


def quadratic_to_json(qs: QuadraticStructure, d1: int | None = None) -> dict:
    out = {"algebra": algebra_to_json(qs.algebra), "omega": matrix_to_json(qs.omega, qs.algebra.field)}
    if d1 is not None:
        out["d1"] = d1
    return out


def quadratic_from_json(obj: dict, base: Path | None = None) -> QuadraticStructure:
    g = _resolve(_get(obj, "algebra", "quadratic structure"), base, None)
    return QuadraticStructure(g, matrix_from_json(_get(obj, "omega", "quadratic structure"), g.field, (g.dim, g.dim)))


def manin_from_json(obj: dict, base: Path | None = None) -> tuple[QuadraticStructure, SplitSignature]:
    """Quadratic structure file with ``d1``, the dimension of the first summand."""
    qs = quadratic_from_json(obj, base)
    d1 = _int(_get(obj, "d1", "Manin triple"), "d1", 0)
    if d1 > qs.algebra.dim:
        raise ShapeMismatch(f"d1 = {d1} exceeds the dimension {qs.algebra.dim}")
    return qs, SplitSignature(d1, qs.algebra.dim - d1)


def split_to_json(sa: SplitAlgebra) -> dict:
    return {"algebra": algebra_to_json(sa.algebra), "d1": sa.sig.d1}


def split_from_json(obj: dict, base: Path | None = None) -> SplitAlgebra:
    g = _resolve(_get(obj, "algebra", "split algebra"), base, None)
    d1 = _int(_get(obj, "d1", "split algebra"), "d1", 0)
    if d1 > g.dim:
        raise ShapeMismatch(f"d1 = {d1} exceeds the dimension {g.dim}")
    return SplitAlgebra(g, SplitSignature(d1, g.dim - d1))


def bialgebra_to_json(pair: BialgebraPair) -> dict:
    return {"g": algebra_to_json(pair.g), "gstar": algebra_to_json(pair.gstar)}


def bialgebra_from_json(obj: dict, base: Path | None = None) -> BialgebraPair:
    g = _resolve(_get(obj, "g", "bialgebra"), base, None)
    gstar = _resolve(_get(obj, "gstar", "bialgebra"), base, g.field)
    return BialgebraPair(g, gstar)


def dendriform_to_json(A: DendriformAlgebra) -> dict:
    return {
        "field": A.field.to_json(),
        "dim": A.dim,
        "left": _entries_to_json(A.left, A.field),
        "right": _entries_to_json(A.right, A.field),
    }


def dendriform_from_json(obj: dict, field: Field | None = None) -> DendriformAlgebra:
    f = _field(obj, field)
    n = _int(_get(obj, "dim", "dendriform algebra"), "dim", 1)
    left = _entries_from_json(_get(obj, "left", "dendriform algebra"), n, f, "left product entry")
    right = _entries_from_json(_get(obj, "right", "dendriform algebra"), n, f, "right product entry")
    return DendriformAlgebra(left, right, f)
