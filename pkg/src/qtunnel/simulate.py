"""Split-operator tunneling runs built from QFT, diagonal synthesis and a
single sigma_z potential gate per step."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

import numpy as np

from .circuit import Circuit, ZRotation, apply_circuit
from .diagsynth import DEFAULT_PRUNE_EPS, decompose_diagonal, synthesize
from .errors import IndexOutOfRange, UnsupportedSize
from .qft import MAX_QFT_QUBITS, bit_reverse_indices, build_qft, build_qft_dagger
from .qstate import StateVector, basis_state, check_qubit_count, from_amplitudes, probabilities


@dataclass(frozen=True)
class LatticeSpec:
    n_qubits: int
    mass: float = 0.5

    def __post_init__(self):
        check_qubit_count(self.n_qubits)
        if not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass}")

    @property
    def size(self) -> int:
        return 1 << self.n_qubits


@dataclass(frozen=True)
class PotentialSpec:
    """Square well on the half-lattice where ``well_qubit`` is 1 (energy -v; +v elsewhere)."""

    well_qubit: int
    strength: float


@dataclass(frozen=True)
class SimulationConfig:
    lattice: LatticeSpec
    delta_t: float
    steps: int
    initial: Union[int, np.ndarray] = 0
    potential: Optional[PotentialSpec] = None
    omit_trivial_potential: bool = False

    def __post_init__(self):
        if not self.delta_t > 0:
            raise ValueError(f"delta_t must be positive, got {self.delta_t}")
        if self.steps < 0:
            raise ValueError(f"steps must be >= 0, got {self.steps}")
        if self.potential is not None and not 0 <= self.potential.well_qubit < self.lattice.n_qubits:
            raise IndexOutOfRange(
                f"well qubit {self.potential.well_qubit} outside [0, {self.lattice.n_qubits})"
            )
        self.initial_state()  # validates

    @property
    def n_qubits(self) -> int:
        return self.lattice.n_qubits

    def initial_state(self) -> StateVector:
        if isinstance(self.initial, (int, np.integer)):
            return basis_state(self.n_qubits, int(self.initial))
        return from_amplitudes(self.n_qubits, self.initial)


@dataclass
class SimulationTrace:
    delta_t: float
    probabilities: np.ndarray  # shape (steps + 1, N), row 0 is the initial state

    @property
    def steps(self) -> np.ndarray:
        return np.arange(self.probabilities.shape[0])

    @property
    def times(self) -> np.ndarray:
        return self.steps * self.delta_t

    @property
    def rows(self) -> Iterator[tuple[int, float, np.ndarray]]:
        for s, p in enumerate(self.probabilities):
            yield s, s * self.delta_t, p

    def __len__(self) -> int:
        return self.probabilities.shape[0]


def centered_wavenumbers(size: int) -> np.ndarray:
    """Fourier mode j mapped to j for j <= N/2 and j - N above."""
    j = np.arange(size)
    return np.where(j <= size // 2, j, j - size)


def kinetic_phase_vector(lattice: LatticeSpec, delta_t: float) -> np.ndarray:
    """Kinetic phase per computational index, in the bit-reversed order the
    swap-free QFT leaves behind.  With mass 1/2 and delta_t 1 this is
    (2 pi / N)^2 times the integer vector (0, 4, 1, 1) for n = 2."""
    N = lattice.size
    q = centered_wavenumbers(N)[bit_reverse_indices(lattice.n_qubits)]
    return (2 * np.pi / N) ** 2 * q.astype(float) ** 2 / (2 * lattice.mass) * delta_t


def _check_circuit_size(lattice: LatticeSpec) -> None:
    if lattice.n_qubits > MAX_QFT_QUBITS:
        raise UnsupportedSize(f"step circuits limited to {MAX_QFT_QUBITS} qubits")


def build_kinetic_circuit(
    lattice: LatticeSpec, delta_t: float, prune_eps: float = DEFAULT_PRUNE_EPS
) -> Circuit:
    _check_circuit_size(lattice)
    n = lattice.n_qubits
    diagonal = synthesize(decompose_diagonal(kinetic_phase_vector(lattice, delta_t)), prune_eps=prune_eps)
    return build_qft_dagger(n) + diagonal + build_qft(n)


def square_well_gate(lattice: LatticeSpec, potential: PotentialSpec, delta_t: float) -> ZRotation:
    if not 0 <= potential.well_qubit < lattice.n_qubits:
        raise IndexOutOfRange(f"well qubit {potential.well_qubit} outside [0, {lattice.n_qubits})")
    return ZRotation(potential.well_qubit, potential.strength * delta_t)


def build_step_circuit(config: SimulationConfig) -> Circuit:
    lattice = config.lattice
    step = build_kinetic_circuit(lattice, config.delta_t)
    pot = config.potential
    if pot is None or (pot.strength == 0 and config.omit_trivial_potential):
        return step
    return step + Circuit(lattice.n_qubits, (square_well_gate(lattice, pot, config.delta_t),))


def run(config: SimulationConfig) -> SimulationTrace:
    step = build_step_circuit(config)
    state = config.initial_state()
    rows = [probabilities(state)]
    for _ in range(config.steps):
        state = apply_circuit(step, state)
        rows.append(probabilities(state))
    return SimulationTrace(config.delta_t, np.array(rows))
