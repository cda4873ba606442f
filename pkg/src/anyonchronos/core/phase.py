"""Global-phase canonicalization and hashing of small complex arrays.

Two arrays equal up to a global phase canonicalize to the same array and key:
the first entry (row-major) with modulus above the tolerance is rotated onto the
positive real axis, then entries are rounded to integer multiples of the
tolerance for hashing.
"""
from typing import Optional, Tuple

import numpy as np

from ..settings import TOL

PhaseKey = Tuple[int, ...]


def canonical_phase(a: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
    tol = TOL.canonical if tol is None else tol
    flat = a.reshape(-1)
    nonzero = np.flatnonzero(np.abs(flat) > tol)
    if nonzero.size == 0:
        return np.zeros_like(a, dtype=complex)
    lead = flat[nonzero[0]]
    return a * (abs(lead) / lead)


def array_key(a: np.ndarray, tol: Optional[float] = None) -> PhaseKey:
    tol = TOL.canonical if tol is None else tol
    scaled = a.reshape(-1) / tol
    re = np.rint(scaled.real).astype(np.int64)
    im = np.rint(scaled.imag).astype(np.int64)
    return tuple(np.stack([re, im], axis=1).reshape(-1).tolist())


def phase_key(a: np.ndarray, tol: Optional[float] = None) -> PhaseKey:
    tol = TOL.canonical if tol is None else tol
    return array_key(canonical_phase(a, tol), tol)


def equal_up_to_phase(a: np.ndarray, b: np.ndarray, tol: Optional[float] = None) -> bool:
    tol = TOL.canonical if tol is None else tol
    if a.shape != b.shape:
        return False
    return float(np.max(np.abs(canonical_phase(a, tol) - canonical_phase(b, tol)))) < tol
