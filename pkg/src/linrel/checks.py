"""Residual records shared by every identity check.

Matrix identities are scored by the Frobenius norm of the difference and
subspace/relation equalities by the gap ‖P_U - P_V‖₂.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, List

import numpy as np

from . import subspace as sub


@dataclass(frozen=True)
class CheckRecord:
    name: str
    anchor: str
    residual: float
    tolerance: float
    passed: bool
    applicable: bool = True
    detail: str = ""

    def to_dict(self):
        d = asdict(self)
        if not np.isfinite(self.residual):
            d["residual"] = None
        return d


def record(name, anchor, residual, tolerance, detail="") -> CheckRecord:
    residual = float(residual)
    return CheckRecord(name, anchor, residual, tolerance, bool(residual <= tolerance), True, detail)


def not_applicable(name, anchor, tolerance, detail) -> CheckRecord:
    return CheckRecord(name, anchor, 0.0, tolerance, True, False, detail)


def failed(name, anchor, tolerance, detail) -> CheckRecord:
    return CheckRecord(name, anchor, float("inf"), tolerance, False, True, detail)


def matrix_residual(A, B) -> float:
    A, B = np.asarray(A), np.asarray(B)
    if A.shape != B.shape:
        return float("inf")
    return float(np.linalg.norm(A - B)) if A.size else 0.0


def subspace_residual(U, V) -> float:
    """Gap between two Subspaces or two relations (via their graphs)."""
    U = getattr(U, "graph", U)
    V = getattr(V, "graph", V)
    return sub.gap(U, V)


def containment(U, V) -> float:
    """Residual of V ⊆ U."""
    U = getattr(U, "graph", U)
    V = getattr(V, "graph", V)
    return sub.containment_residual(U, V)


def combine(name, anchor, tolerance, residuals: Iterable[float], detail="") -> CheckRecord:
    """One record for several sub-residuals; the worst one decides."""
    rs: List[float] = list(residuals)
    return record(name, anchor, max(rs) if rs else 0.0, tolerance, detail)
