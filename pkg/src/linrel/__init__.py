"""Finite-dimensional linear relations, their graph contractions P_T, Q_T, and
executable checks of the identities relating them to T, T* and T_reg."""

from .errors import DimensionMismatchError, PairError, ParseError, PreconditionError, RelationError
from .relation import LinearRelation, RelationParts
from .subspace import Subspace, ToleranceConfig
from .suite import VerificationReport, run_suite

__all__ = [
    "DimensionMismatchError",
    "LinearRelation",
    "PairError",
    "ParseError",
    "PreconditionError",
    "RelationError",
    "RelationParts",
    "Subspace",
    "ToleranceConfig",
    "VerificationReport",
    "run_suite",
]
