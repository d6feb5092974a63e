"""Hadronic observables of exact eigenstates."""

from __future__ import annotations

import numpy as np

from ..core.pauli import OperatorSum
from ..core.state import StateVector, reduced_density
from .build import build_ks_hamiltonian
from .sectors import BasisSector
from .spec import LatticeSpec
from .spectrum import project_operator


def embed(vec: np.ndarray, sector: BasisSector, n_qubits: int) -> StateVector:
    """Lift a sector-coordinate vector to the full register."""
    amps = np.zeros(1 << n_qubits, dtype=complex)
    amps[sector.indices] = vec
    return StateVector(2, n_qubits, amps)


def linear_entropy(state: StateVector, keep_sites) -> float:
    """1 - Tr[rho^2] for the reduced state on ``keep_sites``."""
    rho = reduced_density(state, list(keep_sites))
    return float(1.0 - rho.purity())


def quark_occupation(spec: LatticeSpec, vec: np.ndarray,
                     sector: BasisSector) -> float:
    """Expected number of quarks plus antiquarks."""
    counts = np.zeros(sector.dim)
    for n in range(spec.n_sites):
        for f in range(spec.n_flavors):
            for c in range(spec.n_colors):
                bit = (sector.indices >> spec.qubit(n, f, c)) & 1
                counts += bit if n % 2 == 0 else 1 - bit
    return float(np.sum(counts * np.abs(vec) ** 2))


def energy_decomposition(spec: LatticeSpec, vec: np.ndarray,
                         sector: BasisSector) -> dict:
    """Expectation of the mass, kinetic and chromoelectric terms."""
    terms = build_ks_hamiltonian(spec, split=True)
    out = {}
    for name in ("mass", "kinetic", "electric"):
        mat = project_operator(terms[name], sector)
        out[name] = float(np.real(np.vdot(vec, mat @ vec)))
    return out


def state_observables(spec: LatticeSpec, vec: np.ndarray,
                      sector: BasisSector, keep_sites=None) -> dict:
    """Linear entropy, quark occupation and energy decomposition.

    The entropy partition defaults to the even (quark) staggered sites.
    """
    if keep_sites is None:
        keep_sites = [spec.qubit(n, f, c)
                      for n in range(0, spec.n_sites, 2)
                      for f in range(spec.n_flavors)
                      for c in range(spec.n_colors)]
    out = energy_decomposition(spec, vec, sector)
    out["occupation"] = quark_occupation(spec, vec, sector)
    if spec.quark_width <= 20:
        full = embed(vec, sector, spec.quark_width)
        out["linear_entropy"] = linear_entropy(full, keep_sites)
    return out
