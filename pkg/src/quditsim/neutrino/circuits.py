"""Quantum circuits for neutrino evolution.

Qutrit-native circuits follow the transmon-qudit gate set (Ph, embedded
rotations, controlled shift CX).  The qubit-pair encoding maps
|nu_e> -> |00>, |nu_mu> -> |01>, |nu_tau> -> |10| with |11> unphysical.
The pair-interaction exp(-i alpha lam.lam) costs 4 entangling gates on
qutrits and 18 CNOTs in the qubit "B" compilation (24 in variant "A").
"""

from __future__ import annotations

import math

import numpy as np

from ..core.gates import Circuit
from .model import NeutrinoSystemSpec, one_body_hamiltonian, two_body_pair
from .params import PmnsParams


def pmns_circuit(params: PmnsParams, wire: int = 0, n_sites: int = 1) -> Circuit:
    """Single-qutrit decomposition of the PMNS matrix."""
    half = (-math.pi + params.delta_cp) / 2
    circ = Circuit(n_sites, 3)
    # matrix product order: rightmost factor acts first
    circ.add("ry01", (wire,), (params.theta12,))
    circ.add("rz02", (wire,), (-half,))
    circ.add("ry02", (wire,), (params.theta13,))
    circ.add("rz02", (wire,), (half,))
    circ.add("ry12", (wire,), (params.theta23,))
    return circ


def one_body_circuit(
    spec: NeutrinoSystemSpec, i: int, t: float, n_sites: int = None
) -> Circuit:
    """exp(-i t H_1^(i)) as single-qutrit gates on wire i.

    Mass basis: a single phase gate Ph(0, -omega t, -Omega t) (weighted by
    the neutrino's energy factor).  Flavor basis: the same phase conjugated
    by the PMNS decomposition.
    """
    if spec.flavors != 3:
        raise ValueError("one_body_circuit targets the qutrit encoding")
    n_sites = spec.n if n_sites is None else n_sites
    omega, big = spec.frequencies()
    w = spec.one_body_weight(i)
    circ = Circuit(n_sites, 3)
    if spec.basis == "flavor":
        circ.extend(pmns_circuit(spec.params, i, n_sites).inverse())
    circ.add("ph", (i,), (0.0, -w * omega * t, -w * big * t))
    if spec.basis == "flavor":
        circ.extend(pmns_circuit(spec.params, i, n_sites))
    return circ


def _qutrit_pair_circuit(alpha: float, a: int, b: int, n_sites: int) -> Circuit:
    """exp(-i alpha lam.lam) on qutrits (a, b) with 4 controlled shifts."""
    circ = Circuit(n_sites, 3)
    circ.add("cx3", (a, b))
    circ.add("cx3", (b, a))
    circ.add("rx12", (b,), (2 * alpha,))
    circ.add("cx3dg", (b, a))
    circ.add("ph", (b,), (-2 * alpha, 0.0, 0.0))
    circ.add("cx3dg", (a, b))
    return circ


def _qubit_b_pair_circuit(alpha: float, wires: tuple, n_sites: int) -> Circuit:
    """18-CNOT compilation of exp(-i alpha lam.lam) on two qubit pairs."""
    q0, q1, q2, q3 = wires
    c = Circuit(n_sites, 2)
    pi4 = math.pi / 4
    c.add("cnot", (q0, q2))
    c.add("cnot", (q1, q3))
    c.add("ry", (q0,), (pi4,))
    c.add("ry", (q1,), (pi4,))
    c.add("cnot", (q2, q0))
    c.add("cnot", (q3, q1))
    c.add("ry", (q0,), (-pi4,))
    c.add("ry", (q1,), (-pi4,))
    c.add("rz", (q2,), (-alpha,))
    c.add("rz", (q3,), (-alpha,))
    c.add("cnot", (q0, q2))
    c.add("cnot", (q1, q3))
    c.add("cnot", (q0, q1))
    c.add("rz", (q1,), (-2 * alpha,))
    c.add("rz", (q2,), (alpha,))
    c.add("rz", (q3,), (alpha,))
    c.add("cnot", (q0, q1))
    c.add("cnot", (q1, q2))
    c.add("rz", (q2,), (alpha,))
    c.add("cnot", (q0, q2))
    c.add("rz", (q2,), (-alpha,))
    c.add("cnot", (q0, q3))
    c.add("cnot", (q1, q2))
    c.add("rz", (q3,), (alpha,))
    c.add("cnot", (q1, q3))
    c.add("rz", (q3,), (-alpha,))
    c.add("cnot", (q0, q3))
    c.add("ry", (q0,), (pi4,))
    c.add("ry", (q1,), (pi4,))
    c.add("cnot", (q3, q1))
    c.add("cnot", (q2, q0))
    c.add("ry", (q0,), (-pi4,))
    c.add("ry", (q1,), (-pi4,))
    c.add("cnot", (q1, q3))
    c.add("cnot", (q0, q2))
    return c


def two_neutrino_circuit(
    encoding: str, alpha: float, wires: tuple = None, n_sites: int = None
) -> Circuit:
    """Circuit for exp(-i alpha lam.lam) on one neutrino pair.

    encoding "qutrit": wires = (a, b) qutrits (default (0, 1));
    encoding "qubitB": wires = 4 qubits, neutrino i on the first two
    (low bit first), neutrino j on the last two.
    """
    if encoding == "qutrit":
        wires = (0, 1) if wires is None else tuple(wires)
        n_sites = (max(wires) + 1) if n_sites is None else n_sites
        return _qutrit_pair_circuit(alpha, wires[0], wires[1], n_sites)
    if encoding == "qubitB":
        wires = (0, 1, 2, 3) if wires is None else tuple(wires)
        n_sites = (max(wires) + 1) if n_sites is None else n_sites
        return _qubit_b_pair_circuit(alpha, wires, n_sites)
    raise ValueError(f"unknown encoding {encoding!r}")


def neutrino_gate_counts(n: int, k: int, n_cx: int = 4, scheme: str = "LO") -> int:
    """Entangling-gate counts for k Trotter steps of an N-neutrino system."""
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    base = n_cx * k * n * (n - 1) // 2
    if scheme == "LO":
        return base
    if scheme == "NLO*":
        if k < 2:
            raise ValueError("NLO* requires k >= 2")
        small = math.ceil(n / 2) - 1
        big = n // 2
        return base - n_cx * (k // 2) * small - n_cx * ((k - 1) // 2) * big
    raise ValueError(f"unknown scheme {scheme!r}")


def swap_network_order(n: int) -> list[tuple[int, int]]:
    """All neutrino pairs (i < j) in swap-network encounter order."""
    labels = list(range(n))
    order = []
    for layer in _sw_layers(n):
        for p, q in layer:
            a, b = labels[p], labels[q]
            order.append((min(a, b), max(a, b)))
            labels[p], labels[q] = labels[q], labels[p]
    return order


def _sw_layers(n: int) -> list[list[tuple[int, int]]]:
    # n alternating-parity layers; empty odd layers are kept so that the
    # NLO* boundary bookkeeping alternates small/large correctly
    return [[(p, p + 1) for p in range(l % 2, n - 1, 2)] for l in range(n)]


def _expm_herm(h: np.ndarray, t: float) -> np.ndarray:
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * t * w)) @ v.conj().T


_SWAP3 = np.zeros((9, 9), dtype=complex)
for _a in range(3):
    for _b in range(3):
        _SWAP3[_b + 3 * _a, _a + 3 * _b] = 1.0


def swap_network_circuit(
    spec: NeutrinoSystemSpec,
    t: float,
    k: int,
    scheme: str = "LO",
    absorb_swaps: bool = True,
):
    """k-step Trotter circuit on qutrit wires with swap-network ordering.

    Pair interactions enter as opaque two-qutrit blocks (4 entangling gates
    each on hardware); with absorb_swaps every block also carries the wire
    SWAP, shifting its angle by pi/4.  Scheme "NLO*" alternates the network
    direction between steps and merges the matching boundary layers into
    single blocks (the one-body factors caught between them are folded into
    the merged block).

    Returns (circuit, permutation) with permutation[wire] = neutrino label
    at the end of the circuit.
    """
    if spec.flavors != 3:
        raise ValueError("swap-network circuits target the qutrit encoding")
    if spec.n < 2:
        raise ValueError("need at least two neutrinos")
    if scheme not in ("LO", "NLO*"):
        raise ValueError(f"unknown scheme {scheme!r}")
    if scheme == "NLO*" and k < 2:
        raise ValueError("NLO* requires k >= 2")

    n = spec.n
    dt = t / k
    couplings = spec.pair_couplings(0.0)
    u_one = [_expm_herm(one_body_hamiltonian(spec, i), dt) for i in range(n)]
    pair_op = two_body_pair(3)
    layers = _sw_layers(n)

    # event stream: ("layer", [(p,q),...]) or ("one_body",)
    events = []
    for step in range(k):
        seq = layers if scheme == "LO" or step % 2 == 0 else layers[::-1]
        for layer in seq:
            events.append(("layer", layer))
        events.append(("one_body",))

    circ = Circuit(n, 3)
    labels = list(range(n))
    idx = 0
    prev_layer_live = False  # events[idx-1] is a layer emitted as-is
    while idx < len(events):
        kind = events[idx][0]
        if kind == "one_body":
            # merge boundary: layer, one_body, identical layer
            if (
                scheme == "NLO*"
                and prev_layer_live
                and idx + 1 < len(events)
                and events[idx + 1][0] == "layer"
                and events[idx - 1][1] == events[idx + 1][1]
            ):
                boundary = events[idx - 1][1]
                merged_wires = {w for pq in boundary for w in pq}
                # the boundary layer was already emitted normally: pop its
                # blocks and undo its label swaps, then re-emit merged
                for _ in boundary:
                    circ.gates.pop()
                if absorb_swaps:
                    for p, q in boundary:
                        labels[p], labels[q] = labels[q], labels[p]
                for p, q in boundary:
                    a, b = labels[p], labels[q]
                    j = couplings[(min(a, b), max(a, b))]
                    block = _pair_block(pair_op, j * dt, absorb_swaps)
                    if absorb_swaps:
                        mid = np.kron(u_one[a], u_one[b])
                    else:
                        mid = np.kron(u_one[b], u_one[a])
                    # two absorbed swaps cancel: labels end up unchanged
                    circ.add("unitary", (p, q), matrix=block @ mid @ block)
                for w in range(n):
                    if w not in merged_wires:
                        circ.add("unitary", (w,), matrix=u_one[labels[w]])
                idx += 2  # skip the duplicate layer
                prev_layer_live = False
                continue
            for w in range(n):
                circ.add("unitary", (w,), matrix=u_one[labels[w]])
            idx += 1
            prev_layer_live = False
            continue
        for p, q in events[idx][1]:
            a, b = labels[p], labels[q]
            j = couplings[(min(a, b), max(a, b))]
            circ.add("unitary", (p, q), matrix=_pair_block(pair_op, j * dt, absorb_swaps))
            if absorb_swaps:
                labels[p], labels[q] = labels[q], labels[p]
        idx += 1
        prev_layer_live = True
    return circ, labels


def _pair_block(pair_op: np.ndarray, theta: float, absorb_swap: bool) -> np.ndarray:
    u = _expm_herm(pair_op, theta)
    return _SWAP3 @ u if absorb_swap else u
