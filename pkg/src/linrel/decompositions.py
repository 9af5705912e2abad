"""Regular/singular splitting and the identities proved through relation calculus.

The "formula" side of every identity here is computed with :mod:`linrel.relation`
only (composition, adjoint, operatorlike sum, inverse); the "contraction"
side comes from :mod:`linrel.contractions`. The two share nothing above the
subspace layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import checks
from . import relation as rel
from . import subspace as sub
from .contractions import characteristic_projection, frame, products, stone_blocks
from .relation import LinearRelation


@dataclass(frozen=True, eq=False)
class RegularSingularSplit:
    p_m: np.ndarray
    regular: LinearRelation
    singular: LinearRelation


@lru_cache(maxsize=256)
def split(T: LinearRelation) -> RegularSingularSplit:
    """T_reg = {(x, (I-P_m)y)} and T_sing = {(x, P_m y)}, P_m the projector onto mul T."""
    Pm = np.asarray(T.parts.mul.projector)
    n = T.dim_k
    return RegularSingularSplit(
        p_m=Pm,
        regular=rel.scale_range(T, np.eye(n) - Pm),
        singular=rel.scale_range(T, Pm),
    )


def regular_part(T: LinearRelation) -> LinearRelation:
    return split(T).regular


def singular_part(T: LinearRelation) -> LinearRelation:
    return split(T).singular


@dataclass(frozen=True, eq=False)
class ResolventForms:
    """Everything the identity checks need, computed by relation calculus alone."""

    tstar_t: LinearRelation  # T*T
    t_tstar: LinearRelation  # TT*
    res_h: np.ndarray  # (I + T*T)^{-1}
    res_k: np.ndarray  # (I + TT*)^{-1}
    treg_res_h: np.ndarray  # T_reg (I + T*T)^{-1}
    tstar_reg_res_k: np.ndarray  # (T*)_reg (I + TT*)^{-1}
    ttstar_reg_res_k: np.ndarray  # (TT*)_reg (I + TT*)^{-1}
    p_m: np.ndarray


def resolvent(A: LinearRelation) -> np.ndarray:
    """Matrix of (I + A)^{-1} for a relation A on F^m (raises if not an everywhere-defined operator)."""
    shifted = rel.op_sum(rel.identity(A.dim_h, A.field_tag, A.tol), A)
    return rel.to_everywhere_operator(rel.inverse(shifted))


def compose_with_matrix(T: LinearRelation, R: np.ndarray) -> np.ndarray:
    """Matrix of T∘R where R is everywhere defined and ran R ⊆ dom T."""
    return rel.to_everywhere_operator(rel.compose(T, rel.from_operator_matrix(R, tol=T.tol)))


@lru_cache(maxsize=256)
def resolvent_forms(T: LinearRelation) -> ResolventForms:
    Ts = T.adjoint
    tstar_t = rel.compose(Ts, T)
    t_tstar = rel.compose(T, Ts)
    res_h = resolvent(tstar_t)
    res_k = resolvent(t_tstar)
    return ResolventForms(
        tstar_t=tstar_t,
        t_tstar=t_tstar,
        res_h=res_h,
        res_k=res_k,
        treg_res_h=compose_with_matrix(split(T).regular, res_h),
        tstar_reg_res_k=compose_with_matrix(split(Ts).regular, res_k),
        ttstar_reg_res_k=compose_with_matrix(split(t_tstar).regular, res_k),
        p_m=split(T).p_m,
    )


# -- checks -------------------------------------------------------------------

def split_check(T: LinearRelation, tol: float):
    s = split(T)
    p = T.parts
    product_form = rel.product(p.dom, sub.image(s.p_m, p.ran))
    return [
        checks.record("split.recombine", "T = T_reg + T_sing (operatorlike sum)",
                      checks.subspace_residual(rel.op_sum(s.regular, s.singular), T), tol),
        checks.combine("split.regular_is_operator", "T_reg is an operator contained in T", tol,
                       [float(s.regular.parts.mul.dim), checks.containment(T, s.regular),
                        checks.subspace_residual(s.regular.parts.dom, p.dom)]),
        checks.record("split.singular_product", "T_sing = dom T x P_m(ran T)",
                      checks.subspace_residual(s.singular, product_form), tol),
    ]


def lemma_tt_check(T: LinearRelation, tol: float):
    f = resolvent_forms(T)
    Ts = T.adjoint
    reg = split(T).regular
    return [
        checks.record("lemma_tt.a", "mul(TT*) = mul T",
                      checks.subspace_residual(f.t_tstar.parts.mul, T.parts.mul), tol),
        checks.record("lemma_tt.b", "T*T = (T_reg)* T_reg",
                      checks.subspace_residual(f.tstar_t, rel.compose(reg.adjoint, reg)), tol),
        checks.record("lemma_tt.c", "(TT*)_reg = T_reg (T*)_reg",
                      checks.subspace_residual(split(f.t_tstar).regular,
                                               rel.compose(reg, split(Ts).regular)), tol),
    ]


def stone_check(T: LinearRelation, tol: float):
    """Blocks of E_T against the relation-calculus resolvent formulas."""
    f = resolvent_forms(T)
    m = T.dim_h
    E = characteristic_projection(T)
    E11, E12, E21, E22 = stone_blocks(E, m)
    formula = (f.res_h, f.tstar_reg_res_k, f.treg_res_h, np.eye(T.dim_k) - f.res_k)
    block_res = [checks.matrix_residual(a, b) for a, b in zip((E11, E12, E21, E22), formula)]
    out = [
        checks.combine("stone.blocks", "E_T = [(T*T+I)^-1, (T*)_reg(TT*+I)^-1; T_reg(T*T+I)^-1, I-(TT*+I)^-1]",
                       tol, block_res, detail="block residuals " + ", ".join(f"{r:.2e}" for r in block_res)),
        checks.combine("stone.projector", "E_T is Hermitian and idempotent", tol,
                       [checks.matrix_residual(E, E.conj().T), checks.matrix_residual(E @ E, E)]),
        checks.combine("stone.block_bounds", "diagonal blocks Hermitian PSD, all blocks norm <= 1", tol,
                       _block_bounds(E11, E22, E12, E21)),
    ]
    out.append(classical_stone_check(T, tol))
    return out


def _block_bounds(E11, E22, E12, E21):
    rs = []
    for B in (E11, E22):
        if B.size:
            rs.append(checks.matrix_residual(B, B.conj().T))
            rs.append(max(0.0, -float(np.linalg.eigvalsh((B + B.conj().T) / 2).min())))
    for B in (E11, E22, E12, E21):
        if B.size:
            rs.append(max(0.0, float(np.linalg.norm(B, 2)) - 1.0))
    return rs


def classical_stone_check(T: LinearRelation, tol: float):
    """For everywhere-defined operators: blocks against plain matrix algebra."""
    name, anchor = "stone.classical", "E_T = [(A*A+I)^-1, A*(AA*+I)^-1; A(A*A+I)^-1, AA*(AA*+I)^-1]"
    p = T.parts
    if p.mul.dim or p.dom.dim != T.dim_h:
        return checks.not_applicable(name, anchor, tol, "T is not an everywhere-defined operator")
    A = rel.to_everywhere_operator(T)
    Ah = A.conj().T
    m, n = A.shape[1], A.shape[0]
    Rh = np.linalg.inv(Ah @ A + np.eye(m))
    Rk = np.linalg.inv(A @ Ah + np.eye(n))
    E11, E12, E21, E22 = stone_blocks(characteristic_projection(T), m)
    return checks.combine(name, anchor, tol, [
        checks.matrix_residual(E11, Rh), checks.matrix_residual(E12, Ah @ Rk),
        checks.matrix_residual(E21, A @ Rh), checks.matrix_residual(E22, A @ Ah @ Rk),
    ])


def tstar_t_selfadjointness(T: LinearRelation, tol: float):
    f = resolvent_forms(T)
    pp = products(frame(T)).pp
    m = T.dim_h
    back = rel.op_sum(rel.inverse(rel.from_operator_matrix(pp, tol=T.tol)),
                      rel.from_operator_matrix(-np.eye(m, dtype=pp.dtype), tol=T.tol))
    pp_bounds = [checks.matrix_residual(pp, pp.conj().T)]
    if m:
        pp_bounds.append(max(0.0, -float(np.linalg.eigvalsh((pp + pp.conj().T) / 2).min())))
        pp_bounds.append(max(0.0, float(np.linalg.norm(pp, 2)) - 1.0))
    return [
        checks.record("selfadjoint.tstar_t", "T*T = (T*T)*",
                      checks.subspace_residual(f.tstar_t, f.tstar_t.adjoint), tol),
        checks.record("selfadjoint.t_tstar", "TT* = (TT*)*",
                      checks.subspace_residual(f.t_tstar, f.t_tstar.adjoint), tol),
        checks.combine("selfadjoint.pp_contraction", "P_T P_T* is Hermitian PSD with norm <= 1", tol, pp_bounds),
        checks.record("selfadjoint.pp_inverse_shift", "(P_T P_T*)^-1 - I = T*T",
                      checks.subspace_residual(back, f.tstar_t), tol),
    ]


def splitting_corollary_check(T: LinearRelation, tol: float):
    f = resolvent_forms(T)
    p = T.parts
    reg = split(T).regular
    dom_tt = f.tstar_t.parts.dom
    mid = sub.intersect(T.adjoint.parts.ran, p.dom)
    first = rel.restrict(reg, dom_tt)
    second = rel.restrict(reg, mid)
    out = [checks.record("corollary.splitting_reg",
                         "T_reg = T_reg|dom T*T +^ T_reg|(ran T* ∩ dom T)",
                         checks.subspace_residual(rel.mink_sum(first, second), reg), tol)]
    name, anchor = "corollary.splitting_op", "T = T|dom T*T +^ T|(ran T* ∩ dom T)"
    if rel.is_operator(T):
        summed = rel.mink_sum(rel.restrict(T, dom_tt), rel.restrict(T, mid))
        out.append(checks.record(name, anchor, checks.subspace_residual(summed, T), tol))
    else:
        out.append(checks.not_applicable(name, anchor, tol, "T is multivalued"))
    return out
