"""Fusion measurements and clock POVMs."""

from .catalog import EffectCatalog, enumerate_clifford_povms
from .fusion import FusionOutcome, fuse_pair
from .povm import PovmEffect, covariant_equatorial_povm, naimark_dilation, povm_from_circuit

__all__ = [
    "EffectCatalog",
    "FusionOutcome",
    "PovmEffect",
    "covariant_equatorial_povm",
    "enumerate_clifford_povms",
    "fuse_pair",
    "naimark_dilation",
    "povm_from_circuit",
]
