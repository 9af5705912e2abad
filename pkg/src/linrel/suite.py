"""Run every identity check on one relation and collect a report.

Each check pairs a quantity read off the graph frame with the same quantity
built by relation calculus. Statements about closures are checked with
closure taken as the identity, which is exact for finite-dimensional spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from . import adjoint_pairs as ap
from . import checks
from . import contractions as con
from . import decompositions as dec
from . import relation as rel
from . import subspace as sub
from .checks import CheckRecord
from .errors import RelationError
from .relation import LinearRelation

DEFAULT_CHECK_TOL = 1e-10


@dataclass
class VerificationReport:
    records: List[CheckRecord]
    seed: Optional[int] = None
    generation_class: Optional[str] = None
    label: Optional[str] = None
    summary: Dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def __getitem__(self, name) -> CheckRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> List[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_dict(self):
        return {
            "passed": self.passed,
            "seed": self.seed,
            "class": self.generation_class,
            "label": self.label,
            "summary": self.summary,
            "checks": [r.to_dict() for r in self.records],
        }

    def to_text(self) -> str:
        lines = []
        head = self.label or "relation"
        if self.seed is not None:
            head += f" (class={self.generation_class}, seed={self.seed})"
        lines.append(head)
        for key, val in self.summary.items():
            lines.append(f"  {key}: {val}")
        for r in self.records:
            status = "PASS" if r.passed else "FAIL"
            if not r.applicable:
                status = "n/a "
            lines.append(f"  [{status}] {r.name:<34} {r.residual:.3e}  {r.anchor}")
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


# -- check groups -------------------------------------------------------------

def _graph_p_image(S: LinearRelation) -> sub.Subspace:
    return sub.from_matrix(S.basis[: S.dim_h], S.dim_h, S.tol, S.field_tag, scale=1.0)


def adjoint_basics(T: LinearRelation, tol: float):
    Ts = T.adjoint
    p = T.parts
    W = rel.flip(T)
    orth = checks.matrix_residual(Ts.basis.conj().T @ W.basis, np.zeros((Ts.dim, W.dim)))
    whole = sub.full(T.dim_h + T.dim_k, T.field_tag, T.tol)
    return [
        checks.record("adjoint.involution", "T** = T (closure is trivial)",
                      checks.subspace_residual(Ts.adjoint, T), tol),
        checks.combine("adjoint.orthogonal_decomposition", "T* (+) W(T**) = K x H", tol,
                       [orth, sub.gap(rel.mink_sum(Ts, W).graph, whole)]),
        checks.combine("adjoint.ker_mul", "ker T* = (ran T)^perp, mul T* = (dom T)^perp", tol,
                       [checks.subspace_residual(Ts.parts.ker, sub.complement(p.ran)),
                        checks.subspace_residual(Ts.parts.mul, sub.complement(p.dom))]),
        checks.record("adjoint.dimension", "dim T* = m + n - dim T",
                      abs(Ts.dim - (T.dim_h + T.dim_k - T.dim)), tol),
    ]


def first_contraction_checks(T: LinearRelation, tol: float):
    """Statements about P_T, P_T* and ran P_T*."""
    F = con.frame(T)
    c = con.products(F)
    kr = con.contraction_kernels_ranges(T)
    f = dec.resolvent_forms(T)
    p = T.parts
    Ts = T.adjoint
    reg = dec.split(T).regular
    dom_tt = f.tstar_t.parts.dom
    qp_range = sub.from_matrix(c.qp, T.dim_k, T.tol, T.field_tag, scale=1.0)
    inter = rel.intersection(T, kr.ran_p_star)
    zero_h = sub.zero(T.dim_h, T.field_tag, T.tol)
    out = [
        checks.record("lemma.ran_qp_in_dom_tstar", "ran Q_T P_T* ⊆ dom T*",
                      sub.containment_residual(Ts.parts.dom, qp_range), tol),
        checks.record("prop.dom_tstar_t", "dom T*T = P_T(T ∩ ran P_T*)",
                      sub.gap(dom_tt, _graph_p_image(inter)), tol),
        checks.record("corollary.dom_ran_p_star", "dom T*T = dom(ran P_T*)",
                      sub.gap(dom_tt, kr.ran_p_star.parts.dom), tol),
        checks.record("corollary.dom_collapse", "dom T*T = dom T (finite dimension)",
                      sub.gap(dom_tt, p.dom), tol),
        checks.record("theorem.ran_p_star_is_reg", "ran P_T* = T_reg (closures trivial)",
                      checks.subspace_residual(kr.ran_p_star, reg), tol),
        checks.record("prop.closable_iff_ker_p_trivial", "T is an operator iff ker P_T = {0}",
                      0.0 if rel.is_operator(T) == (kr.ker_p.dim == 0) else 1.0, tol),
        checks.record("kr_p.a", "ker P_T = {0} x mul T",
                      checks.subspace_residual(kr.ker_p, rel.product(zero_h, p.mul)), tol),
        checks.record("kr_p.b", "ran P_T = dom T = (mul T*)^perp",
                      sub.gap(kr.ran_p, sub.complement(Ts.parts.mul)), tol),
        checks.record("kr_p.c", "ker P_T* = mul T*",
                      sub.gap(kr.ker_p_star, Ts.parts.mul), tol),
        checks.record("kr_p.d", "ran P_T* = T_reg|dom T*T",
                      checks.subspace_residual(kr.ran_p_star, rel.restrict(reg, dom_tt)), tol),
    ]
    name, anchor = "corollary.operator_ran_p_star", "T|dom T*T = T ∩ ran P_T* = ran P_T* (T an operator)"
    if rel.is_operator(T):
        restricted = rel.restrict(T, dom_tt)
        out.append(checks.combine(name, anchor, tol, [
            checks.subspace_residual(restricted, inter),
            checks.subspace_residual(restricted, kr.ran_p_star)]))
    else:
        out.append(checks.not_applicable(name, anchor, tol, "T is multivalued"))
    return out


def second_contraction_checks(T: LinearRelation, tol: float):
    """Statements about Q_T, Q_T* and ran Q_T*."""
    kr = con.contraction_kernels_ranges(T)
    p = T.parts
    Ts = T.adjoint
    reg = dec.split(T).regular
    zero_h = sub.zero(T.dim_h, T.field_tag, T.tol)
    zero_k = sub.zero(T.dim_k, T.field_tag, T.tol)
    mid = sub.intersect(Ts.parts.ran, p.dom)
    first = rel.restrict(reg, mid)
    second = rel.product(zero_h, p.mul)
    orth = checks.matrix_residual(first.basis.conj().T @ second.basis, np.zeros((first.dim, second.dim)))
    out = [
        checks.record("kr_q.a", "ker Q_T = (H x {0}) ∩ T",
                      checks.subspace_residual(kr.ker_q, rel.product(p.ker, zero_k)), tol),
        checks.record("kr_q.b", "ran Q_T = ran T = (ker T*)^perp",
                      sub.gap(kr.ran_q, sub.complement(Ts.parts.ker)), tol),
        checks.record("kr_q.c", "ker Q_T* = (ran T)^perp = ker T*",
                      sub.gap(kr.ker_q_star, Ts.parts.ker), tol),
        checks.combine("kr_q.d", "ran Q_T* = T_reg|(ran T* ∩ dom T) (+) ({0} x mul T)", tol,
                       [checks.subspace_residual(kr.ran_q_star, rel.mink_sum(first, second)), orth]),
    ]
    name, anchor = "corollary.operator_ran_q_star", "ran Q_T* = T|(ran T* ∩ dom T) (T an operator)"
    if rel.is_operator(T):
        out.append(checks.record(name, anchor,
                                 checks.subspace_residual(kr.ran_q_star, rel.restrict(T, mid)), tol))
    else:
        out.append(checks.not_applicable(name, anchor, tol, "T is multivalued"))
    return out


def pair_checks(T: LinearRelation, tol: float):
    S = T.adjoint
    rep = ap.analyze_pair(T, S, tol)
    return [
        checks.record("pair.a", "P_T P_T* + Q_S Q_S* = I_H (S = T*)", rep.cond_a, tol),
        checks.record("pair.b", "P_S P_S* + Q_T Q_T* = I_K (S = T*)", rep.cond_b, tol),
        checks.record("pair.c", "Q_T P_T* = P_S Q_S* (S = T*)", rep.cond_c, tol),
        checks.record("pair.unitary", "U_{T,T*} is unitary", rep.isometry_residual
                      if rep.unitary else max(rep.isometry_residual, 1.0), tol),
        checks.record("pair.agreement", "contraction criterion agrees with S = T*, T = S* (T** = T, S** = S)",
                      0.0 if rep.consistent else 1.0, tol),
    ]


def moore_penrose_checks(T: LinearRelation, tol: float):
    """P_T† P_T is the identity on ran P_T*."""
    R = con.ran_p_star(con.frame(T))
    m = T.dim_h
    res = []
    for j in range(R.dim):
        g = R.basis[:, j]
        res.append(float(np.linalg.norm(con.mp_apply(T, g[:m]) - g)))
    return [checks.combine("moore_penrose.left_inverse", "P_T† P_T = I on ran P_T*", tol, res)]


def frame_independence(T: LinearRelation, tol: float):
    """Contraction products are unchanged by a unitary change of frame."""
    d = T.dim
    rng = np.random.default_rng(0)
    Z = rng.standard_normal((d, d))
    if T.field_tag == "complex":
        Z = Z + 1j * rng.standard_normal((d, d))
    Q, _ = np.linalg.qr(Z) if d else (np.zeros((0, 0)), None)
    a = con.products(con.frame(T))
    b = con.products(con.frame(T, T.basis @ Q))
    return [checks.combine("frame.independence", "contraction products do not depend on the frame", tol,
                           [checks.matrix_residual(x, y) for x, y in
                            zip((a.pp, a.pq, a.qp, a.qq), (b.pp, b.pq, b.qp, b.qq))])]


GROUPS: Dict[str, Callable] = {
    "adjoint": adjoint_basics,
    "split": dec.split_check,
    "p_contraction": first_contraction_checks,
    "q_contraction": second_contraction_checks,
    "lemma_tt": dec.lemma_tt_check,
    "main": con.resolvent_identities,
    "stone": dec.stone_check,
    "selfadjoint": dec.tstar_t_selfadjointness,
    "splitting": dec.splitting_corollary_check,
    "pair": pair_checks,
    "moore_penrose": moore_penrose_checks,
    "frame": frame_independence,
}


def _matrix_view(A, digits=12):
    A = np.round(np.asarray(A), digits) + 0.0
    if np.iscomplexobj(A):
        if not np.any(A.imag):
            A = A.real
        else:
            return [[[float(z.real), float(z.imag)] for z in row] for row in A]
    return A.tolist()


def summarize(T: LinearRelation) -> Dict:
    p = T.parts
    c = con.products(con.frame(T))
    out = {
        "dim_h": T.dim_h,
        "dim_k": T.dim_k,
        "dim": T.dim,
        "dims(dom, ran, ker, mul)": [p.dom.dim, p.ran.dim, p.ker.dim, p.mul.dim],
        "is_operator": rel.is_operator(T),
        "pp": _matrix_view(c.pp),
        "pq": _matrix_view(c.pq),
        "qp": _matrix_view(c.qp),
        "qq": _matrix_view(c.qq),
    }
    if T.dim_h == T.dim_k:
        out["is_selfadjoint"] = rel.is_selfadjoint(T)
    return out


def run_suite(T: LinearRelation, tol: float = DEFAULT_CHECK_TOL, groups=None, summary=True,
              seed=None, generation_class=None, label=None) -> VerificationReport:
    """Every check on T. Never raises: a check that errors becomes a failed record."""
    records: List[CheckRecord] = []
    for gname in (groups or GROUPS):
        try:
            records.extend(GROUPS[gname](T, tol))
        except (RelationError, np.linalg.LinAlgError) as exc:
            records.append(checks.failed(gname, "check group raised", tol, f"{type(exc).__name__}: {exc}"))
    info = {}
    if summary:
        try:
            info = summarize(T)
        except (RelationError, np.linalg.LinAlgError) as exc:
            info = {"error": str(exc)}
    return VerificationReport(records, seed, generation_class, label, info)
