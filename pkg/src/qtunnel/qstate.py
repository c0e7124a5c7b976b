"""Dense state vectors on n qubits and the gate kernels that act on them.

Amplitude ``k`` is the lattice site whose binary digits are the qubit values,
with qubit 0 the least significant bit.  Every ``apply_*`` function returns a
new :class:`StateVector`; the ``*_inplace`` kernels mutate a raw amplitude
array and are what :func:`qtunnel.circuit.apply_circuit` uses on its working copy.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import (
    DuplicateQubit,
    IndexOutOfRange,
    LengthMismatch,
    NotNormalized,
    SizeMismatch,
    UnsupportedSize,
)

MAX_QUBITS = 24
_SQRT1_2 = 1.0 / np.sqrt(2.0)


def check_qubit_count(n_qubits: int, limit: int = MAX_QUBITS) -> int:
    if not isinstance(n_qubits, (int, np.integer)) or not 1 <= n_qubits <= limit:
        raise UnsupportedSize(f"n_qubits must be in [1, {limit}], got {n_qubits!r}")
    return int(n_qubits)


@dataclass
class StateVector:
    n_qubits: int
    amps: np.ndarray

    def __post_init__(self):
        check_qubit_count(self.n_qubits)
        self.amps = np.asarray(self.amps, dtype=np.complex128)
        if self.amps.shape != (1 << self.n_qubits,):
            raise LengthMismatch(
                f"expected {1 << self.n_qubits} amplitudes, got shape {self.amps.shape}"
            )

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def copy(self) -> StateVector:
        return StateVector(self.n_qubits, self.amps.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


def basis_state(n_qubits: int, index: int) -> StateVector:
    n_qubits = check_qubit_count(n_qubits)
    if not 0 <= index < (1 << n_qubits):
        raise IndexOutOfRange(f"lattice index {index} outside [0, {1 << n_qubits})")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n_qubits, amps)


def from_amplitudes(n_qubits: int, amps) -> StateVector:
    """Wrap ``amps`` as a state, renormalizing away drift below 1e-6."""
    n_qubits = check_qubit_count(n_qubits)
    arr = np.array(amps, dtype=np.complex128).ravel()
    if arr.shape[0] != 1 << n_qubits:
        raise LengthMismatch(f"expected {1 << n_qubits} amplitudes, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise NotNormalized("amplitudes must be finite")
    norm = np.linalg.norm(arr)
    if abs(norm - 1.0) > 1e-6:
        raise NotNormalized(f"state norm is {norm:.9g}, expected 1")
    return StateVector(n_qubits, arr / norm)


def _check_qubit(n_qubits: int, qubit: int) -> int:
    if not 0 <= qubit < n_qubits:
        raise IndexOutOfRange(f"qubit {qubit} outside [0, {n_qubits})")
    return int(qubit)


def check_qubit_set(n_qubits: int, qubits: Iterable[int]) -> tuple[int, ...]:
    qs = [_check_qubit(n_qubits, q) for q in qubits]
    if len(set(qs)) != len(qs):
        raise DuplicateQubit(f"repeated qubit in {qs}")
    return tuple(sorted(qs))


@lru_cache(maxsize=32)
def _indices(dim: int) -> np.ndarray:
    idx = np.arange(dim, dtype=np.int64)
    idx.flags.writeable = False
    return idx


# -- in-place kernels ---------------------------------------------------------
# Reshaping to (high, 2, low) exposes bit `qubit` as the middle axis, so the
# pair (k0, k1) differing only in that bit is view[:, 0, :] / view[:, 1, :].

def hadamard_inplace(amps: np.ndarray, qubit: int) -> None:
    view = amps.reshape(-1, 2, 1 << qubit)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = (a0 + a1) * _SQRT1_2
    view[:, 1, :] = (a0 - a1) * _SQRT1_2


def z_rotation_inplace(amps: np.ndarray, qubit: int, theta: float) -> None:
    view = amps.reshape(-1, 2, 1 << qubit)
    view[:, 0, :] *= np.exp(-1j * theta)
    view[:, 1, :] *= np.exp(1j * theta)


def controlled_phase_inplace(amps: np.ndarray, qubits: Iterable[int], phase: float) -> None:
    mask = 0
    for q in qubits:
        mask |= 1 << q
    idx = _indices(amps.shape[0])
    amps[(idx & mask) == mask] *= np.exp(1j * phase)


# -- value-to-value gate application ------------------------------------------

def apply_hadamard(state: StateVector, qubit: int) -> StateVector:
    qubit = _check_qubit(state.n_qubits, qubit)
    out = state.copy()
    hadamard_inplace(out.amps, qubit)
    return out


def apply_z_rotation(state: StateVector, qubit: int, theta: float) -> StateVector:
    """Apply exp(-i theta sigma_z) to ``qubit``."""
    qubit = _check_qubit(state.n_qubits, qubit)
    out = state.copy()
    z_rotation_inplace(out.amps, qubit, theta)
    return out


def apply_controlled_phase(state: StateVector, qubits: Iterable[int], phase: float) -> StateVector:
    """Multiply by exp(i phase) every amplitude whose listed bits are all 1."""
    qs = check_qubit_set(state.n_qubits, qubits)
    if len(qs) < 2:
        raise IndexOutOfRange("controlled phase needs at least two qubits")
    out = state.copy()
    controlled_phase_inplace(out.amps, qs, phase)
    return out


def probabilities(state: StateVector) -> np.ndarray:
    return np.abs(state.amps) ** 2


def inner_product(a: StateVector, b: StateVector) -> complex:
    if a.n_qubits != b.n_qubits:
        raise SizeMismatch(f"{a.n_qubits} vs {b.n_qubits} qubits")
    return complex(np.vdot(a.amps, b.amps))
