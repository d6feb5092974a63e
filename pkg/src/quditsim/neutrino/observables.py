"""Flavor, entanglement and non-stabilizerness observables.

The magic measures are stabilizer Renyi entropies built from the forward
matrix elements c_P = <psi|P|psi> of all d^2 Pauli strings (qubit strings
I, X, Y, Z; qutrit strings the nine canonical shift/clock words), with
Xi_P = |c_P|^2 / d a probability distribution and

    M_2 = -log2( d * sum_P Xi_P^2 ).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ..core.pauli import QUTRIT_LABELS, qutrit_op_matrix
from ..core.stabilizer import stabilizer_states
from ..core.state import StateVector


def _site_ops(dim_local: int) -> np.ndarray:
    if dim_local == 2:
        mats = [
            np.eye(2),
            np.array([[0, 1], [1, 0]]),
            np.array([[0, -1j], [1j, 0]]),
            np.diag([1.0, -1.0]),
        ]
    elif dim_local == 3:
        mats = [qutrit_op_matrix(lab) for lab in QUTRIT_LABELS]
    else:
        raise ValueError("dim_local must be 2 or 3")
    return np.array([m.astype(complex) for m in mats])


def pauli_spectrum(state: StateVector) -> np.ndarray:
    """c_P = <psi|P|psi> for every Pauli string, as a flat array of length
    (d_local^2)^n.  Contracted site by site, so the cost is O(n d^{2n+2})."""
    d = state.dim_local
    n = state.n_sites
    ops = _site_ops(d)
    t = np.transpose(ops, (0, 2, 1))  # t[p, i, j] = P_p[j, i]
    rho = np.tensordot(
        state.amps.reshape((d,) * n),
        state.amps.conj().reshape((d,) * n),
        axes=0,
    )
    out = rho
    for s in range(n):
        out = np.tensordot(t, out, axes=([1, 2], [n - 1, out.ndim - 1]))
    return out.reshape(-1)


@dataclass(frozen=True)
class MagicReport:
    m_lin: float
    m1: float
    m2: float
    xi_sum: float


def sre_magic(state: StateVector) -> MagicReport:
    """Stabilizer Renyi entropy measures of a normalized pure state."""
    norm = float(np.vdot(state.amps, state.amps).real)
    if abs(norm - 1.0) > 1e-8:
        raise ValueError("state must be normalized")
    d = state.dim_local**state.n_sites
    xi = np.abs(pauli_spectrum(state)) ** 2 / d
    xi_sum = float(xi.sum())
    p2 = float((xi**2).sum())
    nz = xi[xi > 1e-300]
    m1 = float(-(nz * np.log2(d * nz)).sum())
    return MagicReport(
        m_lin=1.0 - d * p2,
        m1=m1,
        m2=-math.log2(d * p2),
        xi_sum=xi_sum,
    )


def magic_power(unitary: np.ndarray, dim_local: int, n_sites: int) -> float:
    """Average M_2 of U|Phi> over all n-qudit stabilizer states."""
    if n_sites > 2:
        raise ValueError("stabilizer enumeration available for 1 or 2 sites")
    states = stabilizer_states(dim_local, n_sites)
    total = 0.0
    for st in states:
        evolved = StateVector(dim_local, n_sites, unitary @ st.amps)
        total += sre_magic(evolved).m2
    return total / len(states)


def one_body_magic_power_closed_form(
    t: float, flavors: int, omega: float, big_omega: float = None
) -> float:
    """Closed-form magic power of exp(-i H_1 t) with H_1 = diag(0, omega)
    for two flavors or diag(0, omega, big_omega) for three."""
    if flavors == 2:
        return 2.0 * (1.0 - math.log2(7.0 + math.cos(4 * omega * t)) / 3.0)
    if flavors == 3:
        if big_omega is None:
            raise ValueError("three-flavor form needs big_omega")
        s = (
            57.0
            + 8 * math.cos(6 * omega * t)
            + 8 * math.cos(6 * big_omega * t)
            + 8 * math.cos(6 * (big_omega - omega) * t)
        )
        return -0.75 * math.log2(s / 81.0)
    raise ValueError("flavors must be 2 or 3")


def reduced_density(state: StateVector, keep: tuple) -> np.ndarray:
    """Reduced density matrix on the listed sites (ascending site order)."""
    d = state.dim_local
    n = state.n_sites
    keep = tuple(sorted(keep))
    # amps reshaped axes run from site n-1 down to site 0
    axes_keep = [n - 1 - s for s in reversed(keep)]
    others = [a for a in range(n) if a not in axes_keep]
    psi = np.transpose(state.amps.reshape((d,) * n), axes_keep + others)
    k = len(keep)
    psi = psi.reshape(d**k, -1)
    return psi @ psi.conj().T


def persistence(state: StateVector, initial: StateVector) -> float:
    """|<initial|state>|^2."""
    return float(abs(np.vdot(initial.amps, state.amps)) ** 2)


def flavor_probabilities(source, spec, i: int, postselect: str = "pHS"):
    """Per-flavor probabilities of neutrino i.

    source: a StateVector over d=spec.flavors sites (exact), or a histogram
    {qubit-basis index: weight} over 2*n qubits in the pair encoding
    (|e>,|m>,|t>) -> (|00>,|01>,|10>), pair 0 in the low bits.
    postselect: "pHS" discards outcomes with any unphysical |11> pair,
    "snHS" keeps only the marginal of pair i.
    """
    if isinstance(source, StateVector):
        rho = reduced_density(source, (i,))
        probs = np.array(
            [float((spec.flavor_state(f).conj() @ rho @ spec.flavor_state(f)).real)
             for f in ("e", "m", "t")[: spec.flavors]]
        )
    else:
        probs = _histogram_probs(source, spec.n, i, postselect)
    total = probs.sum()
    if total <= 0:
        raise ValueError("no probability left after post-selection")
    return probs / total


def _histogram_probs(hist: dict, n: int, i: int, postselect: str) -> np.ndarray:
    probs = np.zeros(3)
    for idx, weight in hist.items():
        pairs = [(idx >> (2 * p)) & 3 for p in range(n)]
        if postselect == "pHS":
            if any(v == 3 for v in pairs):
                continue
        elif postselect == "snHS":
            if pairs[i] == 3:
                continue
        else:
            raise ValueError("postselect must be 'pHS' or 'snHS'")
        probs[pairs[i]] += weight
    return probs


def entanglement_measures(state: StateVector) -> dict:
    """Single-neutrino entropies, concurrence sums and n-tangles.

    C = 4 sum_i (l1 l2 + l1 l3 + l2 l3), G = sum_i l1 l2 l3 over the
    eigenvalues of each reduced density matrix; tau_2 and tau_4 average
    |<psi| J_a^(s1) ... J_a^(sn) |psi>|^2 over SO(3) generator insertions
    on distinct neutrinos.
    """
    n = state.n_sites
    entropy = []
    linear_entropy = []
    conc = 0.0
    gen_conc = 0.0
    for i in range(n):
        lam = np.linalg.eigvalsh(reduced_density(state, (i,))).real
        lam = np.clip(lam, 0.0, 1.0)
        nz = lam[lam > 1e-15]
        entropy.append(float(-(nz * np.log2(nz)).sum()))
        linear_entropy.append(float(1.0 - (lam**2).sum()))
        e2 = 0.0
        for a, b in combinations(range(len(lam)), 2):
            e2 += lam[a] * lam[b]
        conc += 4.0 * e2
        gen_conc += float(np.prod(lam)) if len(lam) >= 3 else 0.0
    return {
        "entropy": entropy,
        "linear_entropy": linear_entropy,
        "concurrence": conc,
        "generalized_concurrence": gen_conc,
        "tau2": _n_tangle(state, 2),
        "tau4": _n_tangle(state, 4) if n >= 4 else 0.0,
    }


_SO3 = [
    np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]]),
    np.array([[0, 0, 1j], [0, 0, 0], [-1j, 0, 0]]),
    np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]]),
]
_SO2 = [np.array([[0, -1j], [1j, 0]])]


def _n_tangle(state: StateVector, n_ins: int) -> float:
    n = state.n_sites
    if n < n_ins:
        return 0.0
    gens = _SO3 if state.dim_local == 3 else _SO2
    total = 0.0
    count = 0
    for g in gens:
        for sites in combinations(range(n), n_ins):
            psi = state
            for s in sites:
                psi = psi.apply_matrix(g, (s,))
            total += abs(np.vdot(state.amps, psi.amps)) ** 2
            count += 1
    return total / count
