from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .tensors import nonzero_entries

MAX_WITNESSES = 20


@dataclass
class Witness:
    condition: str
    indices: tuple[int, ...] = ()  # 1-based basis indices
    residual: list = field(default_factory=list)  # [(1-based index tuple, scalar)]

    def to_json(self):
        return {
            "condition": self.condition,
            "basis": list(self.indices),
            "residual": [
                {"index": list(idx), "coeff": str(v)} for idx, v in self.residual
            ],
        }


@dataclass
class CheckReport:
    """Verdict of a structural check: holds iff no witness was recorded."""

    subject: str
    witnesses: list[Witness] = field(default_factory=list)
    derived: dict = field(default_factory=dict)
    truncated: bool = False

    @property
    def holds(self) -> bool:
        return not self.witnesses

    @property
    def status(self) -> str:
        return "holds" if self.holds else "fails"

    def __bool__(self):
        return self.holds

    def fail(self, condition: str, indices=(), residual=None) -> None:
        if len(self.witnesses) >= MAX_WITNESSES:
            self.truncated = True
            return
        res = []
        if residual is not None:
            arr = np.asarray(residual, dtype=object)
            if arr.ndim == 0:
                res = [((), arr.item())]
            else:
                res = [(tuple(i + 1 for i in idx), v) for idx, v in nonzero_entries(arr, MAX_WITNESSES)]
        self.witnesses.append(Witness(condition, tuple(i + 1 for i in indices), res))

    def absorb(self, other: CheckReport, prefix: str = "") -> None:
        for w in other.witnesses:
            if len(self.witnesses) >= MAX_WITNESSES:
                self.truncated = True
                return
            self.witnesses.append(Witness(prefix + w.condition, w.indices, w.residual))

    def first(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    def to_json(self) -> dict:
        out = {"status": self.status, "subject": self.subject}
        if self.witnesses:
            out["witnesses"] = [w.to_json() for w in self.witnesses]
            if self.truncated:
                out["truncated"] = True
        if self.derived:
            out["derived"] = self.derived
        return out


def scan_residual(report: CheckReport, condition: str, residual: np.ndarray, n_index_axes: int) -> None:
    """Record a witness for every basis tuple whose residual vector is nonzero.

    ``residual`` has ``n_index_axes`` leading basis axes; the remaining axes
    hold the residual coefficients for that tuple.
    """
    residual = np.asarray(residual, dtype=object)
    for idx in np.ndindex(*residual.shape[:n_index_axes]):
        r = residual[idx]
        if any(v != 0 for v in np.asarray(r, dtype=object).flat):
            report.fail(condition, idx, r)
            if report.truncated:
                return
