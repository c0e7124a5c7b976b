"""Diagonal phase operators over the Z-product basis.

A subset S of qubits defines the basis vector ``b_S(k) = -1`` when every bit
of S is set in k and ``+1`` otherwise; ``b_{}`` is all ones.  Singletons are
sigma_z diagonals and pairs are the diag(1, 1, 1, -1) pattern of a CZ.  Any
real phase vector theta decomposes uniquely as

    theta = global_phase + sum_S a_S b_S

and ``exp(-i theta)`` is then realized, up to the global phase, by one
Z rotation per singleton and one controlled phase per larger subset.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .circuit import Circuit, ControlledPhase, ZRotation
from .errors import BadLength, UnsupportedSize
from .qstate import check_qubit_count

MAX_DIAG_QUBITS = 12
DEFAULT_PRUNE_EPS = 1e-9

Subset = tuple  # sorted tuple of qubit indices


def canonical_subsets(n_qubits: int) -> list[Subset]:
    """All subsets of range(n) ordered by size, then lexicographically."""
    return [s for r in range(n_qubits + 1) for s in combinations(range(n_qubits), r)]


def _mask(subset: Subset) -> int:
    m = 0
    for q in subset:
        m |= 1 << q
    return m


@dataclass(frozen=True)
class DiagonalBasisElement:
    subset: Subset
    n_qubits: int

    @property
    def values(self) -> np.ndarray:
        m = _mask(self.subset)
        idx = np.arange(1 << self.n_qubits)
        if m == 0:
            return np.ones(1 << self.n_qubits)
        return np.where((idx & m) == m, -1.0, 1.0)


@dataclass
class DiagonalDecomposition:
    n_qubits: int
    coefficients: dict = field(default_factory=dict)
    global_phase: float = 0.0

    def reconstruct(self) -> np.ndarray:
        out = np.full(1 << self.n_qubits, self.global_phase, dtype=float)
        for subset, a in self.coefficients.items():
            out += a * DiagonalBasisElement(subset, self.n_qubits).values
        return out

    def scaled(self, factor: float) -> DiagonalDecomposition:
        return DiagonalDecomposition(
            self.n_qubits,
            {s: factor * a for s, a in self.coefficients.items()},
            factor * self.global_phase,
        )


def zproduct_basis(n_qubits: int) -> list[DiagonalBasisElement]:
    n = check_qubit_count(n_qubits, MAX_DIAG_QUBITS)
    return [DiagonalBasisElement(s, n) for s in canonical_subsets(n)]


def _subset_mobius(values: np.ndarray, n_qubits: int) -> np.ndarray:
    """Coefficients mu over AND-monomials: values[k] = sum of mu[S] for S inside k."""
    mu = values.astype(float).copy()
    for j in range(n_qubits):
        view = mu.reshape(-1, 2, 1 << j)
        view[:, 1, :] -= view[:, 0, :]
    return mu


def decompose_diagonal(phases) -> DiagonalDecomposition:
    theta = np.asarray(phases, dtype=float).ravel()
    size = theta.shape[0]
    if size < 2 or size & (size - 1):
        raise BadLength(f"phase vector length {size} is not a power of two >= 2")
    n = size.bit_length() - 1
    if n > MAX_DIAG_QUBITS:
        raise UnsupportedSize(f"diagonal synthesis limited to {MAX_DIAG_QUBITS} qubits")
    if not np.all(np.isfinite(theta)):
        raise ValueError("phase vector must be finite")
    mu = _subset_mobius(theta, n)
    # AND-monomial m_S = (1 - b_S) / 2, so a_S = -mu_S / 2 and the constant
    # parts collect into the global phase.
    coefficients = {s: -0.5 * mu[_mask(s)] for s in canonical_subsets(n)[1:]}
    global_phase = mu[0] + 0.5 * (mu.sum() - mu[0])
    return DiagonalDecomposition(n, coefficients, float(global_phase))


def synthesize(
    decomp: DiagonalDecomposition,
    delta_t: float = 1.0,
    prune_eps: float = DEFAULT_PRUNE_EPS,
) -> Circuit:
    """Circuit for exp(-i delta_t * theta), theta being the decomposed vector.

    Terms whose scaled angle is at most ``prune_eps`` in magnitude are
    dropped, as is the global phase.  exp(-i a b_S) equals exp(-i a) times a
    phase of exp(2 i a) on the all-ones component, hence the ``2 * a``.
    """
    if prune_eps < 0:
        raise ValueError("prune_eps must be non-negative")
    gates = []
    for subset in canonical_subsets(decomp.n_qubits)[1:]:
        a = decomp.coefficients.get(subset, 0.0) * delta_t
        if abs(a) <= prune_eps:
            continue
        if len(subset) == 1:
            gates.append(ZRotation(subset[0], a))
        else:
            gates.append(ControlledPhase(subset, 2.0 * a))
    return Circuit(decomp.n_qubits, tuple(gates))


def synthesis_cost(n_qubits: int) -> tuple[int, int]:
    """Worst-case gate counts: Z-product basis (2^n - 1) vs quadratic-diagonal n^2."""
    if n_qubits < 1:
        raise UnsupportedSize("n_qubits must be >= 1")
    return (1 << n_qubits) - 1, n_qubits * n_qubits


def kinetic_gamma(n_qubits: int) -> float:
    """Kinetic normalization (2 pi / N)^2 / sqrt(N) used to quote coefficients."""
    N = 1 << n_qubits
    return (2 * np.pi / N) ** 2 / np.sqrt(N)
