"""Seeded random relations for fuzzing, one constructor per relation class."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import relation as rel
from . import subspace as sub
from .relation import LinearRelation
from .subspace import DEFAULT_TOL, ToleranceConfig

CLASSES = (
    "generic",
    "operator",
    "everywhere-defined-operator",
    "self-adjoint",
    "pure-multivalued",
    "singular-product",
)
FIELDS = ("real", "complex")


@dataclass(frozen=True)
class RandomSpec:
    max_dim: int
    cls: str = "generic"
    seed: int = 0
    field: str = "complex"

    def __post_init__(self):
        if self.max_dim < 0:
            raise ValueError("max_dim must be nonnegative")
        if self.cls not in CLASSES:
            raise ValueError(f"unknown class {self.cls!r}; expected one of {', '.join(CLASSES)}")
        if self.field not in FIELDS:
            raise ValueError(f"unknown field {self.field!r}")


def trial_seed(seed: int, index: int) -> int:
    """Independent 64-bit seed for trial ``index`` of a run started with ``seed``."""
    return int(np.random.SeedSequence([seed & (2**64 - 1), index]).generate_state(1, np.uint64)[0])


def _gauss(rng, shape, field):
    Z = rng.standard_normal(shape)
    if field == "complex":
        Z = (Z + 1j * rng.standard_normal(shape)) / np.sqrt(2)
    return Z


def random_subspace(rng, d, field="complex", dim=None, tol=DEFAULT_TOL) -> sub.Subspace:
    k = int(rng.integers(0, d + 1)) if dim is None else dim
    return sub.from_matrix(_gauss(rng, (d, k), field), d, tol, field)


def random_relation(spec: RandomSpec, tol: ToleranceConfig = DEFAULT_TOL) -> LinearRelation:
    rng = np.random.default_rng(spec.seed & (2**64 - 1))
    f = spec.field
    m = int(rng.integers(0, spec.max_dim + 1))
    n = m if spec.cls == "self-adjoint" else int(rng.integers(0, spec.max_dim + 1))

    if spec.cls == "generic":
        d = int(rng.integers(0, m + n + 1))
        return rel.from_generators(_gauss(rng, (m + n, d), f), m, n, tol, f)
    if spec.cls == "operator":
        A = _gauss(rng, (n, m), f)
        return rel.from_operator_matrix(A, random_subspace(rng, m, f, tol=tol), tol)
    if spec.cls == "everywhere-defined-operator":
        return rel.from_operator_matrix(_gauss(rng, (n, m), f), tol=tol)
    if spec.cls == "self-adjoint":
        # Hermitian operator on a subspace D, plus D^⊥ as multivalued part
        D = random_subspace(rng, m, f, tol=tol)
        H = _gauss(rng, (D.dim, D.dim), f)
        H = (H + H.conj().T) / 2
        A = D.basis @ H @ D.basis.conj().T
        graph_part = rel.from_operator_matrix(A, D, tol)
        multi = rel.product(sub.zero(m, f, tol), sub.complement(D))
        return rel.mink_sum(graph_part, multi)
    if spec.cls == "pure-multivalued":
        return rel.product(sub.zero(m, f, tol), random_subspace(rng, n, f, tol=tol))
    # singular-product
    return rel.product(random_subspace(rng, m, f, tol=tol), random_subspace(rng, n, f, tol=tol))


def corner_cases(field="complex", tol: ToleranceConfig = DEFAULT_TOL):
    """Degenerate relations: empty ambient spaces, the zero relation, the full product."""
    out = {}
    for m, n in [(0, 0), (0, 3), (3, 0), (2, 3)]:
        out[f"zero_{m}x{n}"] = rel.product(sub.zero(m, field, tol), sub.zero(n, field, tol))
        out[f"full_{m}x{n}"] = rel.product(sub.full(m, field, tol), sub.full(n, field, tol))
    return out
