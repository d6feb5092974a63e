"""Depolarizing noise, decoherence renormalization and Pauli twirling.

The noise model follows the standard coherent-error-free picture: each
two-qubit gate is followed by a depolarizing kick.  The global variant
mixes the whole register toward the maximally mixed state, which is the
regime where the decoherence-renormalization ratio formula inverts the
channel exactly; a local per-gate variant is kept as an option.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core.gates import Circuit, Gate
from ..core.kernels import apply_matrix
from ..core.sample import make_rng
from ..core.state import DensityMatrix, StateVector


@dataclass(frozen=True)
class NoiseModel:
    """Depolarizing strengths per gate arity; ``local`` scopes the mixing
    to the gate wires instead of the full register."""

    p2: float
    p1: float = 0.0
    local: bool = False

    def __post_init__(self):
        for p in (self.p1, self.p2):
            if not 0.0 <= p <= 1.0:
                raise ValueError("depolarizing strength must lie in [0, 1]")


def _apply_gate_rho(rho: np.ndarray, gate: Gate, n_sites: int, d: int) -> np.ndarray:
    """U rho U^dag with the register flattened as a 2*n_sites-qudit vector
    (row sites low, column sites high)."""
    mat = gate.matrix()
    flat = rho.flatten(order="F")
    flat = apply_matrix(flat, mat, tuple(gate.targets), d, 2 * n_sites)
    shifted = tuple(t + n_sites for t in gate.targets)
    flat = apply_matrix(flat, mat.conj(), shifted, d, 2 * n_sites)
    return flat.reshape(rho.shape, order="F")


def _mix_global(rho: np.ndarray, p: float) -> np.ndarray:
    dim = rho.shape[0]
    return (1.0 - p) * rho + p * np.trace(rho).real * np.eye(dim) / dim


def _mix_local(rho: np.ndarray, p: float, targets, n_sites: int, d: int) -> np.ndarray:
    """Mix only the gate wires: (1-p) rho + p Tr_t rho (x) I/d^k."""
    dim = rho.shape[0]
    idx = np.arange(dim)
    digits = [(idx // d**s) % d for s in range(n_sites)]
    rest = [s for s in range(n_sites) if s not in targets]
    rest_code = sum(digits[s] * d**k for k, s in enumerate(rest))
    tgt_code = sum(digits[s] * d**k for k, s in enumerate(sorted(targets)))
    nr, nt = d**len(rest), d**len(targets)
    red = np.zeros((nr, nr), dtype=complex)
    same_tgt = tgt_code[:, None] == tgt_code[None, :]
    np.add.at(red, (rest_code[:, None] + 0 * rest_code[None, :],
                    0 * rest_code[:, None] + rest_code[None, :]), rho * same_tgt)
    full = red[np.ix_(rest_code, rest_code)] * same_tgt / nt
    return (1.0 - p) * rho + p * full


def depolarize(state, noise: NoiseModel, circuit: Circuit) -> DensityMatrix:
    """Run ``circuit`` with a depolarizing kick after each gate.

    Accepts a StateVector or DensityMatrix; always returns a DensityMatrix.
    With ``noise.local`` false (default), each two-qudit gate mixes the whole
    register with weight p2, so a probability measured after k such gates is
    (1-p2)^k * ideal + (1-(1-p2)^k) / dim.
    """
    if isinstance(state, StateVector):
        rho = DensityMatrix.from_state(state)
    else:
        rho = state
    d, n = circuit.dim_local, circuit.n_sites
    m = rho.matrix.copy()
    for gate in circuit.gates:
        m = _apply_gate_rho(m, gate, n, d)
        p = noise.p2 if gate.is_two_qudit() else noise.p1
        if p > 0.0:
            if noise.local:
                m = _mix_local(m, p, tuple(gate.targets), n, d)
            else:
                m = _mix_global(m, p)
    return DensityMatrix(d, n, m)


def decoherence_renormalize(p_phys_noisy: float, p_id_noisy: float,
                            p_id_exact: float, d_n: float) -> float:
    """Invert global depolarizing decay by ratio against an identity run.

    P_phys = d_n + (P_phys_noisy - d_n) (P_id_exact - d_n) / (P_id_noisy - d_n),
    where d_n is the fully-decohered probability of the post-selected
    outcome set (1/dim for a single basis outcome).
    """
    if abs(p_id_noisy - d_n) < 1e-6:
        raise ValueError("identity-run probability too close to the "
                         "decohered value; renormalization is singular")
    return d_n + (p_phys_noisy - d_n) * (p_id_exact - d_n) / (p_id_noisy - d_n)


def _normalize(hist: dict) -> dict:
    total = sum(hist.values())
    if total <= 0:
        raise ValueError("post-selection discarded every outcome")
    return {k: v / total for k, v in hist.items()}


def _color_charges(spec, outcome: int):
    from ..lattice.sectors import _mode_masks

    masks = _mode_masks(spec)
    qs = []
    for c in range(spec.n_colors):
        q = 0
        for f in range(spec.n_flavors):
            even, odd = masks[(f, c)]
            q += bin(outcome & even).count("1")
            q += bin(outcome & odd).count("1") - spec.L
        qs.append(q)
    return qs


def postselect(histogram: dict, rule: str, spec=None, n_pairs: int = 0,
               pair: int = 0):
    """Filter a measurement histogram down to the physical outcome set.

    rule "charge-sector": keep quark-register outcomes with vanishing net
    charge of every color (needs ``spec``).  rule "phs": keep outcomes
    where none of the ``n_pairs`` qubit pairs sits in the unphysical
    fourth level |11>.  rule "snhs": marginalize onto one pair.
    Returns (renormalized distribution, retention fraction).
    """
    total = sum(histogram.values())
    if total <= 0:
        raise ValueError("empty histogram")
    if rule == "charge-sector":
        if spec is None:
            raise ValueError("charge-sector rule needs the lattice spec")
        kept = {k: v for k, v in histogram.items()
                if all(q == 0 for q in _color_charges(spec, k))}
    elif rule == "phs":
        if n_pairs < 1:
            raise ValueError("phs rule needs the number of qubit pairs")
        kept = {k: v for k, v in histogram.items()
                if all((k >> (2 * j)) & 3 != 3 for j in range(n_pairs))}
    elif rule == "snhs":
        kept = {}
        for k, v in histogram.items():
            key = (k >> (2 * pair)) & 3
            kept[key] = kept.get(key, 0) + v
    else:
        raise ValueError(f"unknown post-selection rule {rule!r}")
    retention = sum(kept.values()) / total
    return _normalize(kept), retention


_PAULI_GATES = ("x", "y", "z")
_PAULI_MATS = {
    "i": np.eye(2),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]]),
    "z": np.diag([1.0, -1.0]).astype(complex),
}


def _conjugate_pair(u: np.ndarray, a: str, b: str):
    """Labels (a', b') with u (a x b) u^dag = phase * (a' x b')."""
    g = np.kron(_PAULI_MATS[b], _PAULI_MATS[a])  # site 0 is the LSB
    m = u @ g @ u.conj().T
    for la, ma in _PAULI_MATS.items():
        for lb, mb in _PAULI_MATS.items():
            cand = np.kron(mb, ma)
            ratio = m[np.abs(cand) > 0.5][0] / cand[np.abs(cand) > 0.5][0]
            if np.allclose(m, ratio * cand):
                return la, lb
    raise RuntimeError("conjugated operator is not a Pauli pair")


def pauli_twirl(circuit: Circuit, seed: int) -> Circuit:
    """Wrap every CNOT/CZ in a random two-qubit Pauli and its image.

    The inserted pair G and G' = U G U^dag leave the noiseless unitary
    unchanged up to a global phase while randomizing coherent gate errors
    into Pauli channels.  Deterministic for a fixed seed.
    """
    rng = make_rng(seed, stream=7)
    out = Circuit(circuit.n_sites, circuit.dim_local)
    for gate in circuit.gates:
        if gate.name not in ("cnot", "cz"):
            if gate.is_two_qudit():
                raise ValueError(f"cannot twirl gate {gate.name!r}")
            out.add(gate.name, list(gate.targets), list(gate.params))
            continue
        a, b = (("i",) + _PAULI_GATES)[rng.integers(4)], \
               (("i",) + _PAULI_GATES)[rng.integers(4)]
        ap, bp = _conjugate_pair(gate.matrix(), a, b)
        i, j = gate.targets
        for lab, q in ((a, i), (b, j)):
            if lab != "i":
                out.add(lab, [q])
        out.add(gate.name, [i, j])
        for lab, q in ((ap, i), (bp, j)):
            if lab != "i":
                out.add(lab, [q])
    return out
