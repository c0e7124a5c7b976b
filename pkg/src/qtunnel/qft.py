"""Swap-free quantum Fourier transform circuits.

``build_qft_dagger(n)`` realizes ``P_rev @ W`` where ``W[j, k] = exp(2 pi i jk / N) / sqrt(N)``
and ``P_rev`` sends output index k to its n-bit reversal.  No terminal swaps
are emitted; callers that need natural order must account for the reversal
themselves (the kinetic diagonal does, see :mod:`qtunnel.simulate`).
"""
from __future__ import annotations

import numpy as np

from .circuit import Circuit, ControlledPhase, Hadamard, adjoint
from .errors import UnsupportedSize
from .qstate import check_qubit_count

MAX_QFT_QUBITS = 12


def bit_reverse(k: int, n_qubits: int) -> int:
    out = 0
    for _ in range(n_qubits):
        out = (out << 1) | (k & 1)
        k >>= 1
    return out


def bit_reverse_indices(n_qubits: int) -> np.ndarray:
    return np.array([bit_reverse(k, n_qubits) for k in range(1 << n_qubits)], dtype=np.int64)


def build_qft_dagger(n_qubits: int) -> Circuit:
    """Hadamards from the top qubit down, each preceded by its phase kicks.

    For n = 3 the application order is
    ``H2, CP{1,2}(2pi/4), H1, CP{0,2}(2pi/8), CP{0,1}(2pi/4), H0``.
    """
    try:
        n = check_qubit_count(n_qubits, MAX_QFT_QUBITS)
    except UnsupportedSize:
        raise UnsupportedSize(f"QFT supports 1..{MAX_QFT_QUBITS} qubits, got {n_qubits!r}") from None
    gates = []
    for target in range(n - 1, -1, -1):
        for higher in range(n - 1, target, -1):
            gates.append(ControlledPhase((target, higher), 2 * np.pi / 2 ** (higher - target + 1)))
        gates.append(Hadamard(target))
    return Circuit(n, tuple(gates))


def build_qft(n_qubits: int) -> Circuit:
    return adjoint(build_qft_dagger(n_qubits))
