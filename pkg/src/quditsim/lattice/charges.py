"""SU(N) charge operators and charge-charge products."""

from __future__ import annotations

import numpy as np

from ..core.pauli import OperatorSum
from .fermions import bilinear
from .spec import LatticeSpec


def gell_mann() -> list[np.ndarray]:
    """The eight Gell-Mann matrices (standard convention)."""
    l1 = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex)
    l2 = np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]])
    l3 = np.diag([1, -1, 0]).astype(complex)
    l4 = np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex)
    l5 = np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]])
    l6 = np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex)
    l7 = np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]])
    l8 = np.diag([1, 1, -2]).astype(complex) / np.sqrt(3)
    return [l1, l2, l3, l4, l5, l6, l7, l8]


def pauli_su2() -> list[np.ndarray]:
    return [np.array([[0, 1], [1, 0]], dtype=complex),
            np.array([[0, -1j], [1j, 0]]),
            np.diag([1, -1]).astype(complex)]


def su_n_generators(n_colors: int) -> list[np.ndarray]:
    """T^a = lambda^a / 2 normalized to Tr T^a T^b = delta_ab / 2."""
    if n_colors == 2:
        lam = pauli_su2()
    elif n_colors == 3:
        lam = gell_mann()
    else:
        raise ValueError("only SU(2) and SU(3) generators are provided")
    return [m / 2 for m in lam]


def site_charge(spec: LatticeSpec, n: int, a: int, flavor: int | None = None,
                n_qubits: int | None = None) -> OperatorSum:
    """Q^(a)_{n} = sum_{f in scope} sum_{c,c'} T^a_{c c'} a^dag_{nfc} a_{nfc'}."""
    nq = n_qubits or spec.quark_width
    t = su_n_generators(spec.n_colors)[a]
    flavors = range(spec.n_flavors) if flavor is None else [flavor]
    acc = OperatorSum.zero(2, nq)
    for f in flavors:
        for c in range(spec.n_colors):
            for cp in range(spec.n_colors):
                if abs(t[c, cp]) > 1e-15:
                    acc = acc + bilinear(nq, spec.qubit(n, f, c),
                                         spec.qubit(n, f, cp), t[c, cp])
    return acc.collect()


def charge_product(spec: LatticeSpec, n: int, m: int,
                   f: int | None = None, fp: int | None = None,
                   n_qubits: int | None = None) -> OperatorSum:
    """Q_{n,f} . Q_{m,f'} = sum_a Q^(a)_{n,f} Q^(a)_{m,f'}."""
    nq = n_qubits or spec.quark_width
    acc = OperatorSum.zero(2, nq)
    n_gen = spec.n_colors**2 - 1
    for a in range(n_gen):
        qa = site_charge(spec, n, a, f, nq)
        qb = site_charge(spec, m, a, fp, nq) if (n, f) != (m, fp) else qa
        acc = acc + qa.matmul(qb)
    return acc.collect()


def truncated_charge_product(spec: LatticeSpec, n: int, m: int,
                             variant: str = "full",
                             n_qubits: int | None = None) -> OperatorSum:
    """Charge-charge product between two single-flavor sites.

    variant "full" is the exact sum over generators. "trun1" and "trun2" are
    the diagonal (ZZ-only) surrogates that agree with the full product on the
    color-singlet subspace: trun1 scales the same-color diagonal up by 4 and
    keeps the symmetrized cross-color ZZ couplings; trun2 keeps only one
    triangle of cross-color couplings.
    """
    if n == m:
        raise ValueError("sites must be distinct")
    nq = n_qubits or spec.quark_width
    if variant == "full":
        return charge_product(spec, n, m, 0, 0, nq)
    if spec.n_colors != 3:
        raise ValueError("truncated variants are defined for SU(3)")

    def zz(c, cp, coeff):
        return OperatorSum.from_ladder(
            2, nq, coeff, {spec.qubit(n, 0, c): "Z", spec.qubit(m, 0, cp): "Z"})

    acc = OperatorSum.zero(2, nq)
    for c in range(3):
        acc = acc + zz(c, c, 1.0 / 3.0)
    if variant == "trun1":
        for c, cp in [(1, 0), (2, 0), (2, 1), (0, 1), (0, 2), (1, 2)]:
            acc = acc + zz(c, cp, -1.0 / 6.0)
    elif variant == "trun2":
        for c, cp in [(1, 0), (2, 0), (2, 1)]:
            acc = acc + zz(c, cp, -1.0 / 3.0)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return acc.collect()


def total_charge(spec: LatticeSpec, a: int, n_qubits: int | None = None) -> OperatorSum:
    nq = n_qubits or spec.quark_width
    acc = OperatorSum.zero(2, nq)
    for n in range(spec.n_sites):
        acc = acc + site_charge(spec, n, a, None, nq)
    return acc.collect()
