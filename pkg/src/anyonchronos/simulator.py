"""Simulator coordinator that ties a model to its bases, gates and catalogs."""

from pathlib import Path
from threading import RLock
from typing import Dict, List, Optional, Sequence, Tuple
import logging

import numpy as np
import yaml

from .braiding.generators import GateMatrix, evaluate_braid, generators
from .braiding.group import PhaseCanonicalGate, group_closure
from .braiding.words import BraidWord
from .clock.conditioning import EvolutionReport, run_schedule
from .clock.resolution import ResolutionReport, time_resolution
from .clock.schedule import ClockSchedule
from .clock.universe import (
    GlobalState,
    prepare_bell_singlet,
    prepare_bell_via_braiding,
    prepare_product,
)
from .core.linalg import NAMED_KETS, Z
from .errors import DimensionMismatchError, PovmError
from .fusion.basis import FusionBasis, qubit_basis, two_triple_basis
from .fusion.state import StateVector, encode_qubit
from .io.schema import PovmFile
from .measurement.catalog import EffectCatalog, enumerate_clifford_povms
from .measurement.povm import PovmEffect
from .model.anyons import AnyonModelSpec, load_model
from .settings import ExperimentConfig, default_config

logger = logging.getLogger(__name__)

RESOURCES = ("singlet", "braided", "product")


def load_povm_file(path: str) -> List[PovmEffect]:
    """Read clock effects from a YAML or JSON file.

    Args:
        path: File with an ``effects`` list of ``{outcome, matrix}`` entries

    Returns:
        The effects, in file order
    """
    raw = yaml.safe_load(Path(path).read_text(encoding="utf-8")) or {}
    try:
        parsed = PovmFile(**raw)
    except (TypeError, ValueError) as e:
        raise PovmError(f"cannot read POVM file {path}: {e}") from None
    effects = []
    for entry in parsed.effects:
        m = np.array([[complex(re, im) for re, im in row] for row in entry.matrix])
        if m.shape != (2, 2):
            raise PovmError(f"effect {entry.outcome} in {path} is not 2x2")
        effects.append(PovmEffect(m, entry.outcome))
    return effects


class AnyonSimulator:
    """Main coordinator for experiments on one anyon model."""

    def __init__(
        self,
        model: str = "su2_2",
        config: Optional[ExperimentConfig] = None,
    ):
        """Initialize the simulator.

        Args:
            model: Model name, ``su2_2`` or ``ising``
            config: Experiment configuration (default: packaged defaults)
        """
        self.config = config or default_config()
        self.model: AnyonModelSpec = load_model(model)
        self._lock = RLock()
        self._generators: Dict[int, Dict[int, GateMatrix]] = {}
        self._closures: Dict[int, Tuple[PhaseCanonicalGate, ...]] = {}
        self._catalogs: Dict[Tuple[int, Optional[str], str], EffectCatalog] = {}

        logger.info(f"Anyon simulator initialized for {self.model.name}")

    def encode(self, labels: Sequence[str]) -> StateVector:
        """Named qubit kets: one label for three sigmas, clock and system labels for six.

        Args:
            labels: Names from ``0 1 + - +i -i``
        """
        unknown = [lab for lab in labels if lab not in NAMED_KETS]
        if unknown:
            raise DimensionMismatchError(f"unknown qubit label {unknown[0]!r}")
        if len(labels) == 1:
            return encode_qubit(labels[0], self.model)
        if len(labels) == 2:
            amps = np.kron(NAMED_KETS[labels[0]], NAMED_KETS[labels[1]])
            return StateVector(self.basis(6), amps)
        raise DimensionMismatchError(f"{len(labels)} qubit labels; give one or two")

    def basis(self, n_anyons: int) -> FusionBasis:
        """Standard basis for three sigmas (one qubit) or six sigmas (clock and system)."""
        if n_anyons == 3:
            return qubit_basis(self.model)
        if n_anyons == 6:
            return two_triple_basis(self.model)
        raise DimensionMismatchError(f"no standard basis for {n_anyons} anyons; use 3 or 6")

    def generators(self, n_anyons: int) -> Dict[int, GateMatrix]:
        """Generator matrices for a basis, computed once.

        Args:
            n_anyons: 3 or 6

        Returns:
            Mapping from strand index i to the exchange of strands i and i+1
        """
        with self._lock:
            if n_anyons not in self._generators:
                self._generators[n_anyons] = generators(self.model, self.basis(n_anyons))
            return self._generators[n_anyons]

    def evaluate(self, word: str, n_anyons: int) -> GateMatrix:
        basis = self.basis(n_anyons)
        return evaluate_braid(BraidWord.parse(word, n_anyons), self.model, basis)

    def closure(self, n_anyons: int) -> Tuple[PhaseCanonicalGate, ...]:
        """Group generated by all braid generators of a basis, modulo phase."""
        with self._lock:
            if n_anyons not in self._closures:
                gens = list(self.generators(n_anyons).values())
                self._closures[n_anyons] = group_closure(gens, self.config.closure_max_size)
            return self._closures[n_anyons]

    def catalog(
        self,
        m: int,
        method: Optional[str] = None,
        ancilla_preparation: str = "zero",
    ) -> EffectCatalog:
        key = (m, method, ancilla_preparation)
        with self._lock:
            if key not in self._catalogs:
                self._catalogs[key] = enumerate_clifford_povms(
                    m,
                    self.model,
                    method=method,
                    ancilla_preparation=ancilla_preparation,
                    max_size=self.config.closure_max_size,
                )
            return self._catalogs[key]

    def resource(self, name: str) -> GlobalState:
        """Fresh global state; each may be conditioned once.

        Args:
            name: ``singlet``, ``braided`` or ``product``
        """
        if name == "singlet":
            return prepare_bell_singlet(self.model)
        if name == "braided":
            return prepare_bell_via_braiding(self.model)
        if name == "product":
            return prepare_product(model=self.model)
        raise DimensionMismatchError(f"unknown resource {name!r}; choose one of {RESOURCES}")

    def schedule(
        self,
        n_ticks: Optional[int] = None,
        povm_file: Optional[str] = None,
    ) -> ClockSchedule:
        if povm_file:
            return ClockSchedule.from_povm(load_povm_file(povm_file))
        n = n_ticks if n_ticks is not None else self.config.ticks
        if n is None:
            raise DimensionMismatchError("a tick count or a POVM file is required")
        return ClockSchedule.equatorial(n)

    def run(
        self,
        resource: str,
        n_ticks: Optional[int] = None,
        povm_file: Optional[str] = None,
        pin_system: bool = False,
        system_hamiltonian: Optional[np.ndarray] = None,
    ) -> EvolutionReport:
        """Prepare a resource, condition it on a schedule and report the emergent dynamics.

        Args:
            resource: Name of the global state, see ``RESOURCES``
            n_ticks: Equatorial tick count, ignored when ``povm_file`` is given
            povm_file: Clock effects to order into a schedule
            pin_system: Require ``H_s = -pi Z / N`` instead of deriving it
            system_hamiltonian: Explicit ``H_s`` to require; overrides ``pin_system``
        """
        schedule = self.schedule(n_ticks, povm_file)
        if system_hamiltonian is None and pin_system:
            system_hamiltonian = -np.pi * Z / schedule.n_ticks
        return run_schedule(self.resource(resource), schedule, system_hamiltonian)

    def resolution(self, gates: str, m: int) -> ResolutionReport:
        catalog = self.catalog(m) if gates == "clifford" else None
        return time_resolution(gates, m, self.model, catalog)
