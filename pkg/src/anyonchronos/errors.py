"""Exceptions raised by anyon-chronos.

Everything derives from ``AnyonChronosError`` which is itself a ``ValueError``,
so callers that only guard against bad arguments keep working.
"""


class AnyonChronosError(ValueError):
    """Base class for all domain errors."""


class ModelError(AnyonChronosError):
    """Anyon model data is malformed or unknown."""


class NonUnitaryError(AnyonChronosError):
    """A matrix that must be unitary is not."""


class DimensionMismatchError(AnyonChronosError):
    """Operands live on spaces of different dimension."""


class EmptyBasisError(AnyonChronosError):
    """No admissible fusion-tree labelling exists for the request."""


class UnsupportedAnyonCountError(AnyonChronosError):
    """Only three- and six-anyon fusion spaces are modelled."""


class BraidWordError(AnyonChronosError):
    """A braid word is malformed or does not fit the basis."""


class ClosureLimitError(AnyonChronosError):
    """Group closure grew past its safety bound."""


class ForbiddenFusionError(AnyonChronosError):
    """Fusion requested across the clock-system cut or outside a triple."""


class PovmError(AnyonChronosError):
    """A POVM is incomplete, not positive, or cannot be dilated."""


class ScaleGuardError(AnyonChronosError):
    """An enumeration was requested beyond its tractable size."""


class ScheduleError(AnyonChronosError):
    """A clock schedule is degenerate or not generated by one rotation."""


class ZeroProbabilityError(AnyonChronosError):
    """Conditioning on an outcome of (numerically) zero probability."""


class AlreadyConditionedError(AnyonChronosError):
    """A global state was conditioned on its clock a second time."""


class NonStationaryStateError(AnyonChronosError):
    """No system Hamiltonian makes the global state stationary."""


class BraidConventionError(AnyonChronosError):
    """Braided resource preparation did not reproduce the expected state."""


class NormalizationError(AnyonChronosError):
    """A state vector is not of unit norm."""
