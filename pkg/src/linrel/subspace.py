"""Rank-revealing subspace arithmetic over real or complex scalars.

A :class:`Subspace` is stored as an orthonormal basis matrix; every lattice
operation goes back through :func:`span`, so the rank cutoff lives in one
place.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from .errors import DimensionMismatchError

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class ToleranceConfig:
    """Tolerances shared by every construction and check.

    ``rank_tol`` is the relative singular-value cutoff. When it is ``None`` the
    cutoff is ``eps * ambient_dim * 64``, resolved per call by :meth:`rank_cutoff`.
    """

    rank_tol: Optional[float] = None
    check_tol: float = 1e-10

    def __post_init__(self):
        if not self.check_tol > 0:
            raise ValueError(f"check_tol must be positive, got {self.check_tol}")
        if self.rank_tol is not None:
            if not self.rank_tol > 0:
                raise ValueError(f"rank_tol must be positive, got {self.rank_tol}")
            if self.rank_tol > self.check_tol:
                raise ValueError("rank_tol must not exceed check_tol")

    def rank_cutoff(self, ambient_dim: int) -> float:
        if self.rank_tol is not None:
            return self.rank_tol
        return EPS * max(ambient_dim, 1) * 64


DEFAULT_TOL = ToleranceConfig()


def _dtype_for(field_tag: str):
    return np.complex128 if field_tag == "complex" else np.float64


def field_of(*arrays) -> str:
    return "complex" if any(np.iscomplexobj(a) for a in arrays) else "real"


def join_field(*tags: str) -> str:
    return "complex" if "complex" in tags else "real"


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of F^d held as a d x r matrix with orthonormal columns."""

    ambient_dim: int
    basis: np.ndarray
    field_tag: str = "real"
    tol: ToleranceConfig = DEFAULT_TOL

    def __post_init__(self):
        if self.basis.shape[0] != self.ambient_dim:
            raise DimensionMismatchError(
                f"basis has {self.basis.shape[0]} rows, ambient_dim is {self.ambient_dim}"
            )
        self.basis.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @cached_property
    def projector(self) -> np.ndarray:
        P = self.basis @ self.basis.conj().T
        P.setflags(write=False)
        return P

    def orthonormality_residual(self) -> float:
        G = self.basis.conj().T @ self.basis
        return float(np.linalg.norm(G - np.eye(self.dim))) if self.dim else 0.0

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, field={self.field_tag})"


def _orth(M: np.ndarray, d: int, tol: ToleranceConfig, scale: Optional[float] = None) -> np.ndarray:
    """Orthonormal basis of the column span of ``M`` (d x k).

    The cutoff is relative to the largest singular value, or to ``scale`` if
    that is larger. Images of orthonormal bases under maps of norm about one
    pass ``scale=1`` so that columns annihilated up to rounding are dropped.
    """
    if M.shape[1] == 0 or d == 0:
        return np.zeros((d, 0), dtype=M.dtype)
    U, s, _ = np.linalg.svd(M, full_matrices=False)
    ref = max(s[0], scale or 0.0)
    if ref == 0.0:
        return np.zeros((d, 0), dtype=M.dtype)
    r = int(np.sum(s > tol.rank_cutoff(d) * ref))
    return np.ascontiguousarray(U[:, :r])


def from_matrix(M, ambient_dim: Optional[int] = None, tol: ToleranceConfig = DEFAULT_TOL,
                field_tag: Optional[str] = None, scale: Optional[float] = None) -> Subspace:
    """Subspace spanned by the columns of ``M``; see :func:`_orth` for ``scale``."""
    M = np.asarray(M)
    if ambient_dim is None:
        ambient_dim = M.shape[0]
    if M.ndim != 2 or M.shape[0] != ambient_dim:
        raise DimensionMismatchError(
            f"expected a matrix with {ambient_dim} rows, got shape {M.shape}"
        )
    tag = field_tag or field_of(M)
    M = M.astype(_dtype_for(tag), copy=False)
    return Subspace(ambient_dim, _orth(M, ambient_dim, tol, scale), tag, tol)


def span(generators: Iterable, ambient_dim: int, tol: ToleranceConfig = DEFAULT_TOL,
         field_tag: Optional[str] = None) -> Subspace:
    """Subspace spanned by a list of vectors of length ``ambient_dim``."""
    vecs = [np.asarray(g).reshape(-1) for g in generators]
    for i, v in enumerate(vecs):
        if v.shape[0] != ambient_dim:
            raise DimensionMismatchError(
                f"generator {i} has length {v.shape[0]}, expected {ambient_dim}"
            )
    tag = field_tag or field_of(*vecs)
    if not vecs:
        M = np.zeros((ambient_dim, 0), dtype=_dtype_for(tag))
    else:
        M = np.stack(vecs, axis=1)
    return from_matrix(M, ambient_dim, tol, tag)


def zero(ambient_dim: int, field_tag: str = "real", tol: ToleranceConfig = DEFAULT_TOL) -> Subspace:
    return Subspace(ambient_dim, np.zeros((ambient_dim, 0), dtype=_dtype_for(field_tag)), field_tag, tol)


def full(ambient_dim: int, field_tag: str = "real", tol: ToleranceConfig = DEFAULT_TOL) -> Subspace:
    return Subspace(ambient_dim, np.eye(ambient_dim, dtype=_dtype_for(field_tag)), field_tag, tol)


def _check_same(U: Subspace, V: Subspace):
    if U.ambient_dim != V.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {U.ambient_dim} vs {V.ambient_dim}"
        )


def complement(U: Subspace) -> Subspace:
    """Orthogonal complement of ``U`` in F^d."""
    d, r = U.ambient_dim, U.dim
    dtype = U.basis.dtype
    if r == 0:
        return Subspace(d, np.eye(d, dtype=dtype), U.field_tag, U.tol)
    if r == d:
        return Subspace(d, np.zeros((d, 0), dtype=dtype), U.field_tag, U.tol)
    # full SVD of an orthonormal basis: trailing left singular vectors span U^⊥
    W, _, _ = np.linalg.svd(U.basis, full_matrices=True)
    return Subspace(d, np.ascontiguousarray(W[:, r:]), U.field_tag, U.tol)


def sum_(U: Subspace, V: Subspace) -> Subspace:
    _check_same(U, V)
    tag = join_field(U.field_tag, V.field_tag)
    M = np.concatenate([U.basis, V.basis], axis=1).astype(_dtype_for(tag), copy=False)
    return Subspace(U.ambient_dim, _orth(M, U.ambient_dim, U.tol, 1.0), tag, U.tol)


def intersect(U: Subspace, V: Subspace) -> Subspace:
    """U ∩ V computed as (U^⊥ + V^⊥)^⊥."""
    _check_same(U, V)
    return complement(sum_(complement(U), complement(V)))


def projector(U: Subspace) -> np.ndarray:
    return U.projector


def containment_residual(U: Subspace, V: Subspace) -> float:
    """Spectral norm of (I - P_U) B_V, the sine of the largest angle from V to U."""
    _check_same(U, V)
    if V.dim == 0:
        return 0.0
    R = V.basis - U.basis @ (U.basis.conj().T @ V.basis)
    return float(np.linalg.norm(R, 2))


def contains_vector(U: Subspace, v, tol: Optional[float] = None) -> bool:
    """Relative test ‖v - P_U v‖ <= tol · ‖v‖."""
    tol = U.tol.check_tol if tol is None else tol
    v = np.asarray(v).reshape(-1)
    if v.shape[0] != U.ambient_dim:
        raise DimensionMismatchError(f"vector has length {v.shape[0]}, expected {U.ambient_dim}")
    r = v - U.basis @ (U.basis.conj().T @ v)
    return np.linalg.norm(r) <= tol * np.linalg.norm(v)


def gap(U: Subspace, V: Subspace) -> float:
    """‖P_U - P_V‖₂: sine of the largest principal angle, 1 when dimensions differ."""
    _check_same(U, V)
    if U.dim != V.dim:
        return 1.0
    return max(containment_residual(U, V), containment_residual(V, U))


def contains(U: Subspace, V: Subspace, tol: Optional[float] = None) -> bool:
    tol = U.tol.check_tol if tol is None else tol
    return containment_residual(U, V) <= tol


def equals(U: Subspace, V: Subspace, tol: Optional[float] = None) -> bool:
    return contains(U, V, tol) and contains(V, U, tol)


def image(M: np.ndarray, U: Subspace, tol: Optional[ToleranceConfig] = None) -> Subspace:
    """Subspace M(U) for a linear map ``M`` acting on F^d."""
    tol = tol or U.tol
    M = np.asarray(M)
    A = M @ U.basis
    tag = join_field(U.field_tag, field_of(M))
    norm = float(np.linalg.norm(M, 2)) if M.size else 0.0
    return Subspace(A.shape[0], _orth(A.astype(_dtype_for(tag), copy=False), A.shape[0], tol, norm), tag, tol)


def direct_product(U: Subspace, V: Subspace) -> Subspace:
    """U × V inside F^(d_U + d_V)."""
    tag = join_field(U.field_tag, V.field_tag)
    dtype = _dtype_for(tag)
    B = np.zeros((U.ambient_dim + V.ambient_dim, U.dim + V.dim), dtype=dtype)
    B[: U.ambient_dim, : U.dim] = U.basis
    B[U.ambient_dim:, U.dim:] = V.basis
    return Subspace(U.ambient_dim + V.ambient_dim, B, tag, U.tol)
