"""Linear relations between F^m and F^n, stored as graph subspaces of F^(m+n).

A vector of the graph is read as a pair {x, y}: x the first m coordinates,
y the last n. Ambient spaces are finite-dimensional, so every relation is
closed; :func:`closure` is the identity and exists to keep call sites aligned
with statements about closed relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np

from . import subspace as sub
from .errors import DimensionMismatchError, PreconditionError
from .subspace import DEFAULT_TOL, Subspace, ToleranceConfig


@dataclass(frozen=True)
class RelationParts:
    dom: Subspace
    ran: Subspace
    ker: Subspace
    mul: Subspace


@dataclass(frozen=True, eq=False)
class LinearRelation:
    dim_h: int
    dim_k: int
    graph: Subspace

    def __post_init__(self):
        if self.graph.ambient_dim != self.dim_h + self.dim_k:
            raise DimensionMismatchError(
                f"graph lives in F^{self.graph.ambient_dim}, expected F^{self.dim_h + self.dim_k}"
            )

    @property
    def basis(self) -> np.ndarray:
        return self.graph.basis

    @property
    def dim(self) -> int:
        return self.graph.dim

    @property
    def field_tag(self) -> str:
        return self.graph.field_tag

    @property
    def tol(self) -> ToleranceConfig:
        return self.graph.tol

    @cached_property
    def parts(self) -> RelationParts:
        return _parts(self)

    @cached_property
    def adjoint(self) -> "LinearRelation":
        return _adjoint(self)

    def __repr__(self):
        return f"LinearRelation(H=F^{self.dim_h}, K=F^{self.dim_k}, dim={self.dim}, field={self.field_tag})"


def _wrap(m: int, n: int, graph: Subspace) -> LinearRelation:
    return LinearRelation(m, n, graph)


# -- constructors -----------------------------------------------------------

def from_pairs(pairs: Sequence[Tuple], m: int, n: int, tol: ToleranceConfig = DEFAULT_TOL,
               field_tag: Optional[str] = None) -> LinearRelation:
    gens = []
    for i, (x, y) in enumerate(pairs):
        x = np.atleast_1d(np.asarray(x))
        y = np.atleast_1d(np.asarray(y))
        if x.shape != (m,) or y.shape != (n,):
            raise DimensionMismatchError(
                f"pair {i} has lengths ({x.size}, {y.size}), expected ({m}, {n})"
            )
        gens.append(np.concatenate([x, y]))
    return _wrap(m, n, sub.span(gens, m + n, tol, field_tag))


def from_generators(G, m: int, n: int, tol: ToleranceConfig = DEFAULT_TOL,
                    field_tag: Optional[str] = None, scale: Optional[float] = None) -> LinearRelation:
    """Relation spanned by the columns of an (m+n) x k matrix."""
    G = np.asarray(G)
    if G.ndim == 1:
        G = G.reshape(m + n, 1)
    return _wrap(m, n, sub.from_matrix(G, m + n, tol, field_tag, scale))


def from_operator_matrix(A, domain: Optional[Subspace] = None,
                         tol: ToleranceConfig = DEFAULT_TOL) -> LinearRelation:
    """Graph {(x, Ax) : x in domain}; the domain defaults to all of F^m."""
    A = np.asarray(A)
    if A.ndim != 2:
        raise DimensionMismatchError(f"operator must be a matrix, got shape {A.shape}")
    n, m = A.shape
    if domain is None:
        D = np.eye(m, dtype=A.dtype)
    else:
        if domain.ambient_dim != m:
            raise DimensionMismatchError(
                f"domain lives in F^{domain.ambient_dim}, operator acts on F^{m}"
            )
        D = domain.basis
    return _wrap(m, n, sub.from_matrix(np.concatenate([D, A @ D], axis=0), m + n, tol))


def product(U: Subspace, V: Subspace) -> LinearRelation:
    """The singular relation U × V."""
    return _wrap(U.ambient_dim, V.ambient_dim, sub.direct_product(U, V))


def identity(m: int, field_tag: str = "real", tol: ToleranceConfig = DEFAULT_TOL) -> LinearRelation:
    dtype = np.complex128 if field_tag == "complex" else np.float64
    return from_operator_matrix(np.eye(m, dtype=dtype), tol=tol)


def closure(T: LinearRelation) -> LinearRelation:
    # every subspace of a finite-dimensional space is closed
    return T


# -- parts --------------------------------------------------------------------

def _block_image(T: LinearRelation, rows: slice, B: np.ndarray) -> Subspace:
    d = B[rows].shape[0]
    return sub.from_matrix(B[rows], d, T.tol, T.field_tag, scale=1.0)


def _parts(T: LinearRelation) -> RelationParts:
    m, n = T.dim_h, T.dim_k
    dom = _block_image(T, slice(0, m), T.basis)
    ran = _block_image(T, slice(m, m + n), T.basis)
    h_axis = sub.direct_product(sub.full(m, T.field_tag, T.tol), sub.zero(n, T.field_tag, T.tol))
    k_axis = sub.direct_product(sub.zero(m, T.field_tag, T.tol), sub.full(n, T.field_tag, T.tol))
    ker = _block_image(T, slice(0, m), sub.intersect(T.graph, h_axis).basis)
    mul = _block_image(T, slice(m, m + n), sub.intersect(T.graph, k_axis).basis)
    return RelationParts(dom, ran, ker, mul)


def parts(T: LinearRelation) -> RelationParts:
    return T.parts


def domain(T):
    return T.parts.dom


def range_(T):
    return T.parts.ran


def kernel(T):
    return T.parts.ker


def multivalued_part(T):
    return T.parts.mul


# -- unary operations -------------------------------------------------------

def _swap_rows(T: LinearRelation, sign: float = 1.0) -> np.ndarray:
    m = T.dim_h
    return np.concatenate([T.basis[m:], sign * T.basis[:m]], axis=0)


def inverse(T: LinearRelation) -> LinearRelation:
    return _wrap(T.dim_k, T.dim_h, Subspace(T.dim_h + T.dim_k, _swap_rows(T), T.field_tag, T.tol))


def flip(T: LinearRelation) -> LinearRelation:
    """W(T) = {(y, -x) : (x, y) in T}, a relation from K to H."""
    return _wrap(T.dim_k, T.dim_h, Subspace(T.dim_h + T.dim_k, _swap_rows(T, -1.0), T.field_tag, T.tol))


def _adjoint(T: LinearRelation) -> LinearRelation:
    W = flip(T)
    return _wrap(T.dim_k, T.dim_h, sub.complement(W.graph))


def adjoint(T: LinearRelation) -> LinearRelation:
    return T.adjoint


# -- binary operations ------------------------------------------------------

def _lift(T: LinearRelation, total: int, rows: np.ndarray) -> Subspace:
    """Embed T's graph into F^total at coordinate ``rows``; remaining coordinates are free."""
    dtype = T.basis.dtype
    free = np.setdiff1d(np.arange(total), rows)
    B = np.zeros((total, T.dim + free.size), dtype=dtype)
    B[rows, : T.dim] = T.basis
    B[free, T.dim + np.arange(free.size)] = 1.0
    return Subspace(total, B, T.field_tag, T.tol)


def _unify_field(*rels: LinearRelation):
    tag = sub.join_field(*(r.field_tag for r in rels))
    out = []
    for r in rels:
        if r.field_tag != tag:
            r = _wrap(r.dim_h, r.dim_k, Subspace(r.graph.ambient_dim, r.basis.astype(np.complex128),
                                                 tag, r.tol))
        out.append(r)
    return out


def compose(T: LinearRelation, S: LinearRelation) -> LinearRelation:
    """The product TS = {(x, z) : (x, y) in S, (y, z) in T for some y}."""
    if S.dim_k != T.dim_h:
        raise DimensionMismatchError(
            f"cannot compose: S maps into F^{S.dim_k}, T acts on F^{T.dim_h}"
        )
    T, S = _unify_field(T, S)
    m, n, l = S.dim_h, S.dim_k, T.dim_k
    total = m + n + l
    idx = np.arange(total)
    D = sub.intersect(_lift(S, total, idx[: m + n]), _lift(T, total, idx[m:]))
    keep = np.concatenate([idx[:m], idx[m + n:]])
    return _wrap(m, l, sub.from_matrix(D.basis[keep], m + l, T.tol, D.field_tag, scale=1.0))


def _check_same_shape(S, T):
    if (S.dim_h, S.dim_k) != (T.dim_h, T.dim_k):
        raise DimensionMismatchError(
            f"relations live in different spaces: F^{S.dim_h}xF^{S.dim_k} vs F^{T.dim_h}xF^{T.dim_k}"
        )


def op_sum(S: LinearRelation, T: LinearRelation) -> LinearRelation:
    """Operatorlike sum {(x, y + z) : (x, y) in S, (x, z) in T}."""
    _check_same_shape(S, T)
    S, T = _unify_field(S, T)
    m, n = S.dim_h, S.dim_k
    total = m + 2 * n
    idx = np.arange(total)
    D = sub.intersect(_lift(S, total, idx[: m + n]),
                      _lift(T, total, np.concatenate([idx[:m], idx[m + n:]])))
    add = np.zeros((m + n, total))
    add[:m, :m] = np.eye(m)
    add[m:, m:m + n] = np.eye(n)
    add[m:, m + n:] = np.eye(n)
    return _wrap(m, n, sub.from_matrix(add @ D.basis, m + n, S.tol, D.field_tag, scale=1.0))


def mink_sum(S: LinearRelation, T: LinearRelation) -> LinearRelation:
    """Componentwise sum of the two graphs."""
    _check_same_shape(S, T)
    return _wrap(S.dim_h, S.dim_k, sub.sum_(S.graph, T.graph))


def intersection(S: LinearRelation, T: LinearRelation) -> LinearRelation:
    _check_same_shape(S, T)
    return _wrap(S.dim_h, S.dim_k, sub.intersect(S.graph, T.graph))


def restrict(T: LinearRelation, D: Subspace) -> LinearRelation:
    """T ∩ (D × F^n)."""
    if D.ambient_dim != T.dim_h:
        raise DimensionMismatchError(
            f"restriction domain lives in F^{D.ambient_dim}, relation acts on F^{T.dim_h}"
        )
    cyl = sub.direct_product(D, sub.full(T.dim_k, T.field_tag, T.tol))
    return _wrap(T.dim_h, T.dim_k, sub.intersect(T.graph, cyl))


def scale_range(T: LinearRelation, M: np.ndarray) -> LinearRelation:
    """{(x, M y) : (x, y) in T} for a square matrix M acting on K."""
    m, n = T.dim_h, T.dim_k
    B = np.concatenate([T.basis[:m], np.asarray(M) @ T.basis[m:]], axis=0)
    scale = max(1.0, float(np.linalg.norm(M, 2))) if np.size(M) else 1.0
    return _wrap(m, n, sub.from_matrix(B, m + n, T.tol, sub.join_field(T.field_tag, sub.field_of(M)), scale))


# -- predicates and extraction ----------------------------------------------

def is_operator(T: LinearRelation) -> bool:
    return T.parts.mul.dim == 0


def equals(S: LinearRelation, T: LinearRelation, tol: Optional[float] = None) -> bool:
    _check_same_shape(S, T)
    return sub.equals(S.graph, T.graph, tol)


def contains(S: LinearRelation, T: LinearRelation, tol: Optional[float] = None) -> bool:
    _check_same_shape(S, T)
    return sub.contains(S.graph, T.graph, tol)


def gap(S: LinearRelation, T: LinearRelation) -> float:
    _check_same_shape(S, T)
    return sub.gap(S.graph, T.graph)


def is_selfadjoint(T: LinearRelation, tol: Optional[float] = None) -> bool:
    if T.dim_h != T.dim_k:
        raise DimensionMismatchError(
            f"self-adjointness needs H = K, got F^{T.dim_h} and F^{T.dim_k}"
        )
    return equals(T, T.adjoint, tol)


def to_everywhere_operator(T: LinearRelation) -> np.ndarray:
    """Matrix A with T = graph(A); T must be single-valued and everywhere defined."""
    p = T.parts
    if p.mul.dim:
        raise PreconditionError(f"relation is multivalued: dim mul = {p.mul.dim}", p.mul.dim)
    if p.dom.dim != T.dim_h:
        raise PreconditionError(
            f"relation is not everywhere defined: dim dom = {p.dom.dim} < {T.dim_h}", p.dom.dim
        )
    m = T.dim_h
    top, bottom = T.basis[:m], T.basis[m:]
    if m == 0:
        return np.zeros((T.dim_k, 0), dtype=T.basis.dtype)
    # A top = bottom with top square invertible
    return np.linalg.solve(top.T, bottom.T).T
