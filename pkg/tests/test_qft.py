import numpy as np
import pytest

from qtunnel.circuit import ControlledPhase, Hadamard, apply_circuit, gate_census, to_unitary
from qtunnel.errors import UnsupportedSize
from qtunnel.qft import bit_reverse, build_qft, build_qft_dagger
from qtunnel.qstate import from_amplitudes, probabilities


def dft(n):
    N = 2**n
    return np.array([[np.exp(2j * np.pi * j * k / N) for k in range(N)] for j in range(N)]) / np.sqrt(N)


def reversal_permutation(n):
    N = 2**n
    p = np.zeros((N, N))
    for k in range(N):
        p[int(format(k, f"0{n}b")[::-1], 2), k] = 1
    return p


def test_small_circuits_match_layout():
    assert build_qft_dagger(1).gates == (Hadamard(0),)
    assert build_qft_dagger(2).gates == (Hadamard(1), ControlledPhase({0, 1}, np.pi / 2), Hadamard(0))
    assert build_qft_dagger(3).gates == (
        Hadamard(2),
        ControlledPhase({1, 2}, 2 * np.pi / 8 * 2),
        Hadamard(1),
        ControlledPhase({0, 2}, 2 * np.pi / 8),
        ControlledPhase({0, 1}, 2 * np.pi / 8 * 2),
        Hadamard(0),
    )


@pytest.mark.parametrize("n", range(1, 9))
def test_gate_counts(n):
    for c in (build_qft_dagger(n), build_qft(n)):
        census = gate_census(c)
        assert census.total == n * (n + 1) // 2
        assert census.single_qubit == n


@pytest.mark.parametrize("n", range(1, 7))
def test_matrix_identity_with_bit_reversal(n):
    np.testing.assert_allclose(to_unitary(build_qft_dagger(n)), reversal_permutation(n) @ dft(n), atol=1e-10)


@pytest.mark.parametrize("n", range(1, 7))
def test_qft_inverts_qft_dagger(n):
    u = to_unitary(build_qft_dagger(n) + build_qft(n))
    np.testing.assert_allclose(u, np.eye(2**n), atol=1e-10)


def test_parseval():
    rng = np.random.default_rng(3)
    v = rng.normal(size=16) + 1j * rng.normal(size=16)
    psi = from_amplitudes(4, v / np.linalg.norm(v))
    out = apply_circuit(build_qft_dagger(4), psi)
    assert abs(probabilities(out).sum() - 1) < 1e-12


def test_bit_reverse():
    assert [bit_reverse(k, 3) for k in range(8)] == [0, 4, 2, 6, 1, 5, 3, 7]


def test_size_limits():
    with pytest.raises(UnsupportedSize):
        build_qft_dagger(0)
    with pytest.raises(UnsupportedSize):
        build_qft(13)
