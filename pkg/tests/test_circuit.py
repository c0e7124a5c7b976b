import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qtunnel.circuit import (
    Circuit,
    ControlledPhase,
    GateCensus,
    Hadamard,
    ZRotation,
    adjoint,
    apply_circuit,
    dump_circuit,
    gate_census,
    to_unitary,
)
from qtunnel.errors import DuplicateQubit, IndexOutOfRange, SizeMismatch, TooLarge
from qtunnel.qstate import basis_state, from_amplitudes


def random_state(n, rng):
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return from_amplitudes(n, v / np.linalg.norm(v))


@st.composite
def circuits(draw, max_qubits=6):
    n = draw(st.integers(1, max_qubits))
    gates = []
    for _ in range(draw(st.integers(0, 15))):
        kind = draw(st.sampled_from(["h", "rz", "cp"] if n > 1 else ["h", "rz"]))
        if kind == "h":
            gates.append(Hadamard(draw(st.integers(0, n - 1))))
        elif kind == "rz":
            gates.append(ZRotation(draw(st.integers(0, n - 1)), draw(st.floats(-7, 7))))
        else:
            qs = draw(st.sets(st.integers(0, n - 1), min_size=2, max_size=n))
            gates.append(ControlledPhase(qs, draw(st.floats(-7, 7))))
    return Circuit(n, gates)


def test_validation():
    with pytest.raises(IndexOutOfRange):
        Circuit(2, [Hadamard(2)])
    with pytest.raises(DuplicateQubit):
        ControlledPhase([1, 1], 0.3)
    with pytest.raises(SizeMismatch):
        apply_circuit(Circuit(2), basis_state(3, 0))
    with pytest.raises(SizeMismatch):
        Circuit(2) + Circuit(3)
    with pytest.raises(TooLarge):
        to_unitary(Circuit(13))


def test_apply_examples():
    psi = basis_state(2, 1)
    np.testing.assert_array_equal(apply_circuit(Circuit(2), psi).amps, psi.amps)
    out = apply_circuit(Circuit(1, [Hadamard(0), Hadamard(0)]), basis_state(1, 0))
    np.testing.assert_allclose(out.amps, [1, 0], atol=1e-15)


def test_adjoint_examples():
    assert adjoint(Circuit(1, [Hadamard(0)])).gates == (Hadamard(0),)
    assert adjoint(Circuit(1, [ZRotation(0, 0.4)])).gates == (ZRotation(0, -0.4),)
    c = Circuit(3, [Hadamard(0), ControlledPhase({0, 2}, 0.5), ZRotation(1, 0.1)])
    assert adjoint(c).gates == (ZRotation(1, -0.1), ControlledPhase({2, 0}, -0.5), Hadamard(0))


def test_census_examples():
    assert gate_census(Circuit(2)) == GateCensus(0, 0, 0)
    c = Circuit(3, [Hadamard(0), ZRotation(1, 1.0), ControlledPhase({0, 1}, 1.0), ControlledPhase({0, 1, 2}, 1.0)])
    census = gate_census(c)
    assert (census.single_qubit, census.two_qubit, census.three_plus_qubit, census.total) == (2, 1, 1, 4)
    assert census * 3 == GateCensus(6, 3, 3)


def test_to_unitary_hadamard():
    np.testing.assert_allclose(
        to_unitary(Circuit(1, [Hadamard(0)])), np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15
    )


def test_to_unitary_matches_kron_convention():
    # qubit 0 is the least significant bit, i.e. the rightmost Kronecker factor
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    np.testing.assert_allclose(to_unitary(Circuit(2, [Hadamard(0)])), np.kron(np.eye(2), h), atol=1e-15)
    np.testing.assert_allclose(to_unitary(Circuit(2, [Hadamard(1)])), np.kron(h, np.eye(2)), atol=1e-15)


def test_dump_format():
    c = Circuit(2, [Hadamard(0), ZRotation(1, np.pi), ControlledPhase({1, 0}, -np.pi / 2)])
    assert dump_circuit(c) == "H q0\nRZ q1 3.14159265359\nCP q0,q1 -1.57079632679\n"
    assert dump_circuit(Circuit(1)) == ""


@settings(max_examples=40, deadline=None)
@given(circuits())
def test_adjoint_is_conjugate_transpose(c):
    u = to_unitary(c)
    np.testing.assert_allclose(to_unitary(adjoint(c)), u.conj().T, atol=1e-10)
    np.testing.assert_allclose(u @ u.conj().T, np.eye(u.shape[0]), atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(circuits(), st.integers(0, 2**16))
def test_state_path_matches_matrix_path(c, seed):
    psi = random_state(c.n_qubits, np.random.default_rng(seed))
    np.testing.assert_allclose(apply_circuit(c, psi).amps, to_unitary(c) @ psi.amps, atol=1e-10)
    back = apply_circuit(adjoint(c), apply_circuit(c, psi))
    np.testing.assert_allclose(back.amps, psi.amps, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(circuits(max_qubits=4), st.data())
def test_census_additive(c1, data):
    c2 = data.draw(circuits(max_qubits=4).filter(lambda c: c.n_qubits == c1.n_qubits))
    assert gate_census(c1 + c2) == gate_census(c1) + gate_census(c2)
