"""Gate IR, circuits, gate census and dense-matrix realization.

Circuits store gates in application order: ``gates[0]`` acts first.  Operator
products written right-to-left (``D = Phi Z1 Z0``) must be reversed when
building a circuit.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

import numpy as np

from . import qstate
from .errors import DuplicateQubit, IndexOutOfRange, SizeMismatch, TooLarge
from .qstate import StateVector

MAX_UNITARY_QUBITS = 12

_H = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / np.sqrt(2.0)


@dataclass(frozen=True)
class Hadamard:
    qubit: int

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.qubit,)

    def adjoint(self) -> Hadamard:
        return self


@dataclass(frozen=True)
class ZRotation:
    """exp(-i theta sigma_z) on one qubit."""

    qubit: int
    theta: float

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.qubit,)

    def adjoint(self) -> ZRotation:
        return ZRotation(self.qubit, -self.theta)


@dataclass(frozen=True)
class ControlledPhase:
    """Phase exp(i phase) on the all-ones component of its qubit set."""

    qubit_set: frozenset
    phase: float

    def __init__(self, qubits: Iterable[int], phase: float):
        qs = list(qubits)
        if len(set(qs)) != len(qs):
            raise DuplicateQubit(f"repeated qubit in {qs}")
        if len(qs) < 2:
            raise IndexOutOfRange("controlled phase needs at least two qubits")
        object.__setattr__(self, "qubit_set", frozenset(int(q) for q in qs))
        object.__setattr__(self, "phase", float(phase))

    @property
    def qubits(self) -> tuple[int, ...]:
        return tuple(sorted(self.qubit_set))

    def adjoint(self) -> ControlledPhase:
        return ControlledPhase(self.qubit_set, -self.phase)


Gate = Union[Hadamard, ZRotation, ControlledPhase]


@dataclass(frozen=True)
class GateCensus:
    single_qubit: int = 0
    two_qubit: int = 0
    three_plus_qubit: int = 0

    @property
    def total(self) -> int:
        return self.single_qubit + self.two_qubit + self.three_plus_qubit

    def __add__(self, other: GateCensus) -> GateCensus:
        return GateCensus(
            self.single_qubit + other.single_qubit,
            self.two_qubit + other.two_qubit,
            self.three_plus_qubit + other.three_plus_qubit,
        )

    def __mul__(self, k: int) -> GateCensus:
        return GateCensus(self.single_qubit * k, self.two_qubit * k, self.three_plus_qubit * k)

    __rmul__ = __mul__


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    gates: tuple = ()

    def __post_init__(self):
        qstate.check_qubit_count(self.n_qubits)
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            for q in g.qubits:
                if not 0 <= q < self.n_qubits:
                    raise IndexOutOfRange(f"{g} acts outside {self.n_qubits} qubits")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __add__(self, other: Circuit) -> Circuit:
        if other.n_qubits != self.n_qubits:
            raise SizeMismatch(f"cannot join {self.n_qubits}- and {other.n_qubits}-qubit circuits")
        return Circuit(self.n_qubits, self.gates + other.gates)


def apply_circuit(circuit: Circuit, state: StateVector) -> StateVector:
    if circuit.n_qubits != state.n_qubits:
        raise SizeMismatch(f"circuit has {circuit.n_qubits} qubits, state has {state.n_qubits}")
    out = state.copy()
    amps = out.amps
    for g in circuit.gates:
        if isinstance(g, Hadamard):
            qstate.hadamard_inplace(amps, g.qubit)
        elif isinstance(g, ZRotation):
            qstate.z_rotation_inplace(amps, g.qubit, g.theta)
        else:
            qstate.controlled_phase_inplace(amps, g.qubit_set, g.phase)
    return out


def adjoint(circuit: Circuit) -> Circuit:
    return Circuit(circuit.n_qubits, tuple(g.adjoint() for g in reversed(circuit.gates)))


def gate_census(circuit: Circuit) -> GateCensus:
    counts = [0, 0, 0]
    for g in circuit.gates:
        counts[min(len(g.qubits), 3) - 1] += 1
    return GateCensus(*counts)


def _gate_diagonal(gate: Gate, n_qubits: int) -> np.ndarray:
    bits = (np.arange(1 << n_qubits)[:, None] >> np.array(gate.qubits)[None, :]) & 1
    if isinstance(gate, ZRotation):
        return np.where(bits[:, 0] == 1, np.exp(1j * gate.theta), np.exp(-1j * gate.theta))
    return np.where(bits.all(axis=1), np.exp(1j * gate.phase), 1.0 + 0j)


def to_unitary(circuit: Circuit) -> np.ndarray:
    """Dense 2^n x 2^n matrix of the circuit, built from explicit gate matrices."""
    n = circuit.n_qubits
    if n > MAX_UNITARY_QUBITS:
        raise TooLarge(f"dense unitary limited to {MAX_UNITARY_QUBITS} qubits, got {n}")
    dim = 1 << n
    u = np.eye(dim, dtype=np.complex128)
    for g in circuit.gates:
        if isinstance(g, Hadamard):
            # row index k = (high, bit, low); contract the 2x2 matrix on the bit axis
            t = u.reshape(dim >> (g.qubit + 1), 2, 1 << g.qubit, dim)
            u = np.einsum("ab,hblc->halc", _H, t).reshape(dim, dim)
        else:
            u = _gate_diagonal(g, n)[:, None] * u
    return u


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def dump_circuit(circuit: Circuit) -> str:
    """One gate per line: ``H q0``, ``RZ q0 <theta>``, ``CP q0,q1 <phase>``."""
    lines = []
    for g in circuit.gates:
        if isinstance(g, Hadamard):
            lines.append(f"H q{g.qubit}")
        elif isinstance(g, ZRotation):
            lines.append(f"RZ q{g.qubit} {_fmt(g.theta)}")
        else:
            qs = ",".join(f"q{q}" for q in g.qubits)
            lines.append(f"CP {qs} {_fmt(g.phase)}")
    return "\n".join(lines) + ("\n" if lines else "")
