"""Dense-matrix ground truth for the circuit path.

Everything here is built straight from the physics: the DFT matrix in natural
order, the spectral kinetic operator, the diagonal square-well potential and
their eigendecomposition exponentials.  Nothing in this module touches the
QFT, diagonal-synthesis or step-circuit builders, so agreement between the two
routes is evidence rather than tautology.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence, Union

import numpy as np

from .errors import EigenFailure, UnsupportedSize
from .simulate import SimulationConfig

MAX_ORACLE_QUBITS = 12


def _check_size(n_qubits: int) -> int:
    if not 1 <= n_qubits <= MAX_ORACLE_QUBITS:
        raise UnsupportedSize(f"oracle limited to 1..{MAX_ORACLE_QUBITS} qubits, got {n_qubits}")
    return n_qubits


def dft_matrix(n_qubits: int) -> np.ndarray:
    """W[j, k] = exp(2 pi i jk / N) / sqrt(N), natural ordering."""
    N = 1 << _check_size(n_qubits)
    j = np.arange(N)
    return np.exp(2j * np.pi * np.outer(j, j) / N) / np.sqrt(N)


def kinetic_energies(n_qubits: int, mass: float) -> np.ndarray:
    """(2 pi / N)^2 q^2 / 2m for modes q = 0..N-1 with q wrapped into (-N/2, N/2]."""
    N = 1 << n_qubits
    q = np.array([j if j <= N // 2 else j - N for j in range(N)], dtype=float)
    return (2 * np.pi / N) ** 2 * q**2 / (2 * mass)


def potential_diagonal(n_qubits: int, well_qubit: int, strength: float) -> np.ndarray:
    sites = np.arange(1 << n_qubits)
    return np.where((sites >> well_qubit) & 1, -strength, strength).astype(float)


@dataclass
class Hamiltonian:
    kinetic: np.ndarray
    potential: np.ndarray  # diagonal entries

    @property
    def matrix(self) -> np.ndarray:
        return self.kinetic + np.diag(self.potential)

    @property
    def dim(self) -> int:
        return self.kinetic.shape[0]


def exact_hamiltonian(config: SimulationConfig) -> Hamiltonian:
    n = _check_size(config.n_qubits)
    w = dft_matrix(n)
    kinetic = w @ np.diag(kinetic_energies(n, config.lattice.mass)) @ w.conj().T
    pot = config.potential
    if pot is None:
        potential = np.zeros(1 << n)
    else:
        potential = potential_diagonal(n, pot.well_qubit, pot.strength)
    return Hamiltonian(kinetic, potential)


def exact_propagator(h: Union[Hamiltonian, np.ndarray], t: float) -> np.ndarray:
    """exp(-i H t) through the eigendecomposition of the symmetrized H."""
    m = h.matrix if isinstance(h, Hamiltonian) else np.asarray(h, dtype=np.complex128)
    m = 0.5 * (m + m.conj().T)
    if not np.all(np.isfinite(m)):
        raise EigenFailure("Hamiltonian has non-finite entries")
    try:
        evals, evecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise EigenFailure(str(exc)) from exc
    return (evecs * np.exp(-1j * evals * t)) @ evecs.conj().T


def exact_step_operator(config: SimulationConfig) -> np.ndarray:
    """exp(-i V dt) exp(-i K dt) with no circuit approximations."""
    h = exact_hamiltonian(config)
    return np.exp(-1j * h.potential * config.delta_t)[:, None] * exact_propagator(
        h.kinetic, config.delta_t
    )


def _initial_vector(config: SimulationConfig) -> np.ndarray:
    N = 1 << config.n_qubits
    if isinstance(config.initial, (int, np.integer)):
        psi = np.zeros(N, dtype=np.complex128)
        psi[int(config.initial)] = 1.0
        return psi
    psi = np.asarray(config.initial, dtype=np.complex128)
    return psi / np.linalg.norm(psi)


def trotter_trace(config: SimulationConfig) -> np.ndarray:
    """Site probabilities after 0..steps applications of the exact step operator."""
    step = exact_step_operator(config)
    psi = _initial_vector(config)
    rows = [np.abs(psi) ** 2]
    for _ in range(config.steps):
        psi = step @ psi
        rows.append(np.abs(psi) ** 2)
    return np.array(rows)


def exact_trace(config: SimulationConfig) -> np.ndarray:
    """Site probabilities of exp(-i H t) psi0 at t = s * delta_t, s = 0..steps."""
    u = exact_propagator(exact_hamiltonian(config), config.delta_t)
    psi = _initial_vector(config)
    rows = [np.abs(psi) ** 2]
    for _ in range(config.steps):
        psi = u @ psi
        rows.append(np.abs(psi) ** 2)
    return np.array(rows)


def trotter_error(config: SimulationConfig, t_final: float) -> float:
    """Largest 2-norm gap between split-operator and exact evolution over basis inputs."""
    steps = int(round(t_final / config.delta_t))
    if steps < 1 or not np.isclose(steps * config.delta_t, t_final, rtol=1e-9, atol=1e-12):
        raise ValueError(f"t_final={t_final} is not a whole number of steps of {config.delta_t}")
    split = np.linalg.matrix_power(exact_step_operator(config), steps)
    exact = exact_propagator(exact_hamiltonian(config), t_final)
    return float(np.linalg.norm(split - exact, axis=0).max())


def convergence_slope(
    config: SimulationConfig, t_final: float, delta_ts: Sequence[float]
) -> tuple[list[float], float]:
    """Trotter errors at each step size and the fitted log-log slope."""
    errors = [trotter_error(replace(config, delta_t=dt, steps=0), t_final) for dt in delta_ts]
    slope = float(np.polyfit(np.log(delta_ts), np.log(errors), 1)[0])
    return errors, slope


def phase_aligned_deviation(a: np.ndarray, b: np.ndarray) -> float:
    """Max entrywise |a - e^{i phi} b| with phi taken from a's largest entry."""
    a = np.asarray(a)
    b = np.asarray(b)
    idx = np.unravel_index(np.argmax(np.abs(a)), a.shape)
    if abs(b[idx]) == 0:
        return float(np.max(np.abs(a - b)))
    phase = (a[idx] / b[idx]) / abs(a[idx] / b[idx])
    return float(np.max(np.abs(a - phase * b)))
