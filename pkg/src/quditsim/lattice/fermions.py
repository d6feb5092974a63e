"""Jordan-Wigner mapped fermionic bilinears on a qubit register.

Mode i maps to qubit i with the Z string on lower-index qubits:
a_i = (Z_0 ... Z_{i-1}) s-_i. |1> = occupied.
"""

from __future__ import annotations

from ..core.pauli import OperatorSum


def bilinear(n_qubits: int, i: int, j: int, coeff=1.0) -> OperatorSum:
    """a^dagger_i a_j (JW string between i and j included)."""
    if i == j:
        return OperatorSum.from_ladder(2, n_qubits, coeff, {i: "N"})
    lo, hi = (i, j) if i < j else (j, i)
    factors = {i: "+", j: "-"}
    for k in range(lo + 1, hi):
        factors[k] = "Z"
    return OperatorSum.from_ladder(2, n_qubits, coeff, factors)


def hop(n_qubits: int, i: int, j: int, coeff=1.0) -> OperatorSum:
    """coeff * (a^dagger_i a_j + h.c.)."""
    return bilinear(n_qubits, i, j, coeff) + bilinear(n_qubits, j, i, coeff)


def number_op(n_qubits: int, i: int, coeff=1.0) -> OperatorSum:
    return OperatorSum.from_ladder(2, n_qubits, coeff, {i: "N"})


def raising_string(n_qubits: int, i: int, coeff=1.0) -> OperatorSum:
    """a^dagger_i with its full JW string (for building composite operators)."""
    factors = {i: "+"}
    for k in range(i):
        factors[k] = "Z"
    return OperatorSum.from_ladder(2, n_qubits, coeff, factors)


def lowering_string(n_qubits: int, i: int, coeff=1.0) -> OperatorSum:
    factors = {i: "-"}
    for k in range(i):
        factors[k] = "Z"
    return OperatorSum.from_ladder(2, n_qubits, coeff, factors)
