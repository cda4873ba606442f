"""Relational clock: tick schedules, global states and conditioning."""

from .conditioning import EvolutionReport, condition, conditional_density, run_schedule
from .hamiltonians import EffectiveHamiltonians, derive_effective_hamiltonians
from .resolution import ancilla_resolution_floor, time_resolution
from .schedule import ClockSchedule, tick_state
from .universe import (
    GlobalState,
    prepare_bell_singlet,
    prepare_bell_via_braiding,
    prepare_partially_entangled,
    prepare_product,
    relate_by_local_clifford,
)

__all__ = [
    "ClockSchedule",
    "EffectiveHamiltonians",
    "EvolutionReport",
    "GlobalState",
    "ancilla_resolution_floor",
    "condition",
    "conditional_density",
    "derive_effective_hamiltonians",
    "prepare_bell_singlet",
    "prepare_bell_via_braiding",
    "prepare_partially_entangled",
    "prepare_product",
    "relate_by_local_clifford",
    "run_schedule",
    "tick_state",
    "time_resolution",
]
