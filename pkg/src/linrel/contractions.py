"""Canonical graph contractions P_T, Q_T and the quantities built from them.

Everything here is computed from an orthonormal frame B_T = [p_block; q_block]
of the graph. With respect to that frame P_T acts as ``p_block`` and Q_T as
``q_block`` (coefficient space -> H, K), and the adjoints are the conjugate
transposes. Only frame products are exported, and those do not depend on
which orthonormal frame was picked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import relation as rel
from . import subspace as sub
from .errors import PreconditionError
from .relation import LinearRelation
from .subspace import Subspace


@dataclass(frozen=True, eq=False)
class GraphFrame:
    relation: LinearRelation
    basis: np.ndarray
    p_block: np.ndarray
    q_block: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def embedding(self) -> np.ndarray:
        """The isometry V_T from coefficient space onto the graph."""
        return self.basis


@dataclass(frozen=True, eq=False)
class ContractionProducts:
    pp: np.ndarray  # P_T P_T*
    pq: np.ndarray  # P_T Q_T*
    qp: np.ndarray  # Q_T P_T*
    qq: np.ndarray  # Q_T Q_T*


def frame(T: LinearRelation, basis: Optional[np.ndarray] = None) -> GraphFrame:
    """Frame of T; ``basis`` may supply any other orthonormal basis of the graph."""
    B = T.basis if basis is None else np.asarray(basis)
    m = T.dim_h
    return GraphFrame(T, B, B[:m], B[m:])


def products(F: GraphFrame) -> ContractionProducts:
    P, Q = F.p_block, F.q_block
    return ContractionProducts(P @ P.conj().T, P @ Q.conj().T, Q @ P.conj().T, Q @ Q.conj().T)


def characteristic_projection(T: LinearRelation) -> np.ndarray:
    """E_T, the orthogonal projector of F^(m+n) onto the graph of T."""
    B = T.basis
    return B @ B.conj().T


def stone_blocks(E: np.ndarray, m: int):
    return E[:m, :m], E[:m, m:], E[m:, :m], E[m:, m:]


def ran_p_star(F: GraphFrame) -> LinearRelation:
    """ran P_T* as a sub-relation of T: columns of B_T p_blockᴴ."""
    T = F.relation
    return rel.from_generators(F.basis @ F.p_block.conj().T, T.dim_h, T.dim_k, T.tol, T.field_tag, scale=1.0)


def ran_q_star(F: GraphFrame) -> LinearRelation:
    T = F.relation
    return rel.from_generators(F.basis @ F.q_block.conj().T, T.dim_h, T.dim_k, T.tol, T.field_tag, scale=1.0)


def _kernel_in_graph(F: GraphFrame, block: np.ndarray) -> LinearRelation:
    """Graph elements B c with block @ c = 0."""
    T = F.relation
    coeff = sub.complement(sub.from_matrix(block.conj().T, F.dim, T.tol, T.field_tag, scale=1.0))
    return rel.from_generators(F.basis @ coeff.basis, T.dim_h, T.dim_k, T.tol, T.field_tag)


@dataclass(frozen=True)
class KernelsRanges:
    ker_p: LinearRelation
    ran_p: Subspace
    ker_p_star: Subspace
    ran_p_star: LinearRelation
    ker_q: LinearRelation
    ran_q: Subspace
    ker_q_star: Subspace
    ran_q_star: LinearRelation


def contraction_kernels_ranges(T: LinearRelation) -> KernelsRanges:
    """Kernels and ranges of P_T, P_T*, Q_T, Q_T*, read off the frame blocks."""
    F = frame(T)
    tol, tag = T.tol, T.field_tag
    ran_p = sub.from_matrix(F.p_block, T.dim_h, tol, tag, scale=1.0)
    ran_q = sub.from_matrix(F.q_block, T.dim_k, tol, tag, scale=1.0)
    return KernelsRanges(
        ker_p=_kernel_in_graph(F, F.p_block),
        ran_p=ran_p,
        ker_p_star=sub.complement(ran_p),
        ran_p_star=ran_p_star(F),
        ker_q=_kernel_in_graph(F, F.q_block),
        ran_q=ran_q,
        ker_q_star=sub.complement(ran_q),
        ran_q_star=ran_q_star(F),
    )


def regular_apply(T: LinearRelation, u) -> np.ndarray:
    """T_reg u for u in dom T: the component of any image of u orthogonal to mul T."""
    u = np.asarray(u).reshape(-1)
    m = T.dim_h
    if u.shape[0] != m:
        raise PreconditionError(f"vector has length {u.shape[0]}, expected {m}")
    dom = T.parts.dom
    if not sub.contains_vector(dom, u):
        raise PreconditionError("vector is not in dom T", dom.dim)
    P, Q = T.basis[:m], T.basis[m:]
    c = np.linalg.lstsq(P, u, rcond=None)[0]
    y = Q @ c
    Pm = T.parts.mul.projector
    return y - Pm @ y


def mp_apply(T: LinearRelation, u) -> np.ndarray:
    """Moore-Penrose inverse of P_T applied to u in dom T: the pair {u, T_reg u}."""
    u = np.asarray(u).reshape(-1)
    y = regular_apply(T, u)
    return np.concatenate([u.astype(y.dtype, copy=False), y])


def resolvent_identities(T: LinearRelation, tol: float):
    """Frame products against their relation-calculus closed forms.

    Residuals: pp vs (I+T*T)^-1, qp vs T_reg(I+T*T)^-1, pq vs (T*)_reg(I+TT*)^-1,
    qq vs I-(I+TT*)^-1 and qq vs P_m + (TT*)_reg(I+TT*)^-1.
    """
    from . import checks
    from .decompositions import resolvent_forms

    f = resolvent_forms(T)
    c = products(frame(T))
    r = checks.record
    n = T.dim_k
    return [
        r("main.a", "P_T P_T* = (I+T*T)^-1", checks.matrix_residual(c.pp, f.res_h), tol),
        r("main.b", "Q_T P_T* = T_reg (I+T*T)^-1", checks.matrix_residual(c.qp, f.treg_res_h), tol),
        r("main.c", "P_T Q_T* = (T*)_reg (I+TT*)^-1", checks.matrix_residual(c.pq, f.tstar_reg_res_k), tol),
        r("main.d", "Q_T Q_T* = I - (I+TT*)^-1",
          checks.matrix_residual(c.qq, np.eye(n) - f.res_k), tol),
        r("main.d_split", "Q_T Q_T* = P_m + (TT*)_reg (I+TT*)^-1",
          checks.matrix_residual(c.qq, f.p_m + f.ttstar_reg_res_k), tol),
    ]
