"""Fusion-tree bases and encoded qubit states."""

from .basis import (
    FusionBasis,
    QubitEncoding,
    QubitRegister,
    qubit_basis,
    standard_basis,
    two_triple_basis,
)
from .state import StateVector, change_basis_z_to_x, decode_qubit, encode_qubit

__all__ = [
    "FusionBasis",
    "QubitEncoding",
    "QubitRegister",
    "StateVector",
    "change_basis_z_to_x",
    "decode_qubit",
    "encode_qubit",
    "qubit_basis",
    "standard_basis",
    "two_triple_basis",
]
