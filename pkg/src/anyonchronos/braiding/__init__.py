"""Braid words, generator matrices and the groups they generate."""

from .generators import (
    GateMatrix,
    evaluate_braid,
    generator_matrix,
    verify_braid_relations,
    y_basis,
)
from .group import (
    PhaseCanonicalGate,
    group_closure,
    identify_sqrt_paulis,
    reachable_states,
    stabilizer_states,
)
from .words import BraidWord, Crossing

__all__ = [
    "BraidWord",
    "Crossing",
    "GateMatrix",
    "PhaseCanonicalGate",
    "evaluate_braid",
    "generator_matrix",
    "group_closure",
    "identify_sqrt_paulis",
    "reachable_states",
    "stabilizer_states",
    "verify_braid_relations",
    "y_basis",
]
