"""Anyon theories as data."""

from .anyons import (
    AnyonLabel,
    AnyonModelSpec,
    FusionRuleTable,
    ising_variant,
    load_model,
    su2_level2,
)
from .validation import validate_model

__all__ = [
    "AnyonLabel",
    "AnyonModelSpec",
    "FusionRuleTable",
    "ising_variant",
    "load_model",
    "su2_level2",
    "validate_model",
]
