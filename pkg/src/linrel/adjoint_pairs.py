"""Adjoint pairs (T, S) and the block isometry U_{T,S} = [P_T, -Q_S; Q_T, P_S]."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import relation as rel
from . import subspace as sub
from .contractions import frame
from .errors import DimensionMismatchError, PairError
from .relation import LinearRelation


@dataclass(frozen=True, eq=False)
class AdjointPairReport:
    is_pair: bool
    u_matrix: np.ndarray
    isometry_residual: float
    cond_a: float  # ‖P_T P_T* + Q_S Q_S* - I_H‖
    cond_b: float  # ‖P_S P_S* + Q_T Q_T* - I_K‖
    cond_c: float  # ‖Q_T P_T* - P_S Q_S*‖
    mutually_adjoint: bool
    adjoint_equalities: bool
    unitary: bool

    @property
    def consistent(self) -> bool:
        """The contraction criterion, the direct adjoint test and unitarity of U agree."""
        return self.mutually_adjoint == self.adjoint_equalities == self.unitary


def _check_dims(T: LinearRelation, S: LinearRelation):
    if (S.dim_h, S.dim_k) != (T.dim_k, T.dim_h):
        raise DimensionMismatchError(
            f"S must map F^{T.dim_k} to F^{T.dim_h}, got F^{S.dim_h} to F^{S.dim_k}"
        )


def is_adjoint_pair(T: LinearRelation, S: LinearRelation, tol=None) -> bool:
    """T ⊆ S* and S ⊆ T*."""
    _check_dims(T, S)
    return rel.contains(S.adjoint, T, tol) and rel.contains(T.adjoint, S, tol)


def u_matrix(T: LinearRelation, S: LinearRelation) -> np.ndarray:
    FT, FS = frame(T), frame(S)
    top = np.concatenate([FT.p_block, -FS.q_block], axis=1)
    bottom = np.concatenate([FT.q_block, FS.p_block], axis=1)
    return np.concatenate([top, bottom], axis=0)


def analyze_pair(T: LinearRelation, S: LinearRelation, tol: float = None) -> AdjointPairReport:
    _check_dims(T, S)
    tol = T.tol.check_tol if tol is None else tol
    if not is_adjoint_pair(T, S, tol):
        raise PairError("T and S are not adjoint to each other")
    FT, FS = frame(T), frame(S)
    m, n = T.dim_h, T.dim_k
    U = u_matrix(T, S)
    k = U.shape[1]
    iso = float(np.linalg.norm(U.conj().T @ U - np.eye(k))) if k else 0.0

    def fro(A):
        return float(np.linalg.norm(A)) if A.size else 0.0

    pT, qT, pS, qS = FT.p_block, FT.q_block, FS.p_block, FS.q_block
    cond_a = fro(pT @ pT.conj().T + qS @ qS.conj().T - np.eye(m))
    cond_b = fro(pS @ pS.conj().T + qT @ qT.conj().T - np.eye(n))
    cond_c = fro(qT @ pT.conj().T - pS @ qS.conj().T)
    mutual = max(cond_a, cond_b, cond_c) <= tol
    direct = rel.equals(S.adjoint, T, tol) and rel.equals(T.adjoint, S, tol)
    return AdjointPairReport(
        is_pair=True,
        u_matrix=U,
        isometry_residual=iso,
        cond_a=cond_a,
        cond_b=cond_b,
        cond_c=cond_c,
        mutually_adjoint=mutual,
        adjoint_equalities=direct,
        unitary=(k == m + n and iso <= tol),
    )


# -- counterexample generators ---------------------------------------------

def proper_restriction(S: LinearRelation, rng: np.random.Generator) -> LinearRelation:
    """A random codimension-one sub-relation of S (S must be nonzero)."""
    if S.dim == 0:
        raise ValueError("the zero relation has no proper sub-relation")
    k = S.dim
    C = rng.standard_normal((k, k - 1))
    if S.field_tag == "complex":
        C = C + 1j * rng.standard_normal((k, k - 1))
    return rel.from_generators(S.basis @ C, S.dim_h, S.dim_k, S.tol, S.field_tag)


def illegal_enlargement(T: LinearRelation, S: LinearRelation, rng: np.random.Generator) -> LinearRelation:
    """T enlarged by a pair outside S*, so (T', S) is no longer an adjoint pair."""
    outside = sub.complement(S.adjoint.graph)
    if outside.dim == 0:
        raise ValueError("S* is the whole space; T cannot be enlarged illegally")
    v = outside.basis @ rng.standard_normal(outside.dim)
    G = np.concatenate([T.basis, v.reshape(-1, 1)], axis=1)
    return rel.from_generators(G, T.dim_h, T.dim_k, T.tol, T.field_tag)
