from .state import StateVector, DensityMatrix, reduced_density
from .pauli import (OMEGA, PauliTerm, OperatorSum, expectation,
                    qutrit_pauli_group, factor_matrix, qutrit_op_matrix,
                    QUTRIT_LABELS)
from .gates import Gate, Circuit, apply_gate, run_circuit, GATE_DEFS
from .evolve import evolve_exact, evolve_matrix, DENSE_THRESHOLD
from .sample import sample_measurements, make_rng
from .stabilizer import stabilizer_states, stabilizer_count

__all__ = [
    "StateVector", "DensityMatrix", "reduced_density",
    "OMEGA", "PauliTerm", "OperatorSum", "expectation", "qutrit_pauli_group",
    "factor_matrix", "qutrit_op_matrix", "QUTRIT_LABELS",
    "Gate", "Circuit", "apply_gate", "run_circuit", "GATE_DEFS",
    "evolve_exact", "evolve_matrix", "DENSE_THRESHOLD",
    "sample_measurements", "make_rng",
    "stabilizer_states", "stabilizer_count",
]
