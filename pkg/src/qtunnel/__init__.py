"""Digital quantum simulation of tunneling in square-well potentials on 2^n-site lattices."""
from .circuit import (
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
from .diagsynth import (
    DiagonalBasisElement,
    DiagonalDecomposition,
    decompose_diagonal,
    kinetic_gamma,
    synthesis_cost,
    synthesize,
    zproduct_basis,
)
from .qft import build_qft, build_qft_dagger
from .qstate import StateVector, basis_state, from_amplitudes, inner_product, probabilities
from .simulate import (
    LatticeSpec,
    PotentialSpec,
    SimulationConfig,
    SimulationTrace,
    build_kinetic_circuit,
    build_step_circuit,
    kinetic_phase_vector,
    run,
    square_well_gate,
)

__version__ = "0.1.0"
