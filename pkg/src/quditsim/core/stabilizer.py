"""Exact enumeration of stabilizer states by Clifford closure.

Starting from the computational basis, repeatedly apply the generating
Clifford set (H and S on each site, CNOT/CX on each ordered pair) until no
new state appears, deduplicating up to global phase. Counts follow
d^n * prod_k (d^k + 1): 6, 60 for qubits and 12, 360 for qutrits at n=1,2.
"""

from __future__ import annotations

import numpy as np

from .gates import Gate, apply_gate
from .state import StateVector


def _canonical_key(amps: np.ndarray, decimals: int = 9) -> tuple:
    idx = np.argmax(np.abs(amps) > 1e-9)
    phase = amps[idx] / abs(amps[idx])
    v = amps / phase
    v = np.round(v.real, decimals) + 1j * np.round(v.imag, decimals)
    v += 0.0  # normalize -0.0
    return tuple(v.tolist())


def _generators(dim_local: int, n_sites: int) -> list[Gate]:
    h, s, cx = ("h", "s", "cnot") if dim_local == 2 else ("h3", "s3", "cx3")
    gates = []
    for i in range(n_sites):
        gates.append(Gate.make(h, (i,)))
        gates.append(Gate.make(s, (i,)))
    for i in range(n_sites):
        for j in range(n_sites):
            if i != j:
                gates.append(Gate.make(cx, (i, j)))
    return gates


def stabilizer_states(dim_local: int, n_sites: int) -> list[StateVector]:
    if n_sites not in (1, 2):
        raise ValueError("stabilizer enumeration supported for 1 or 2 sites")
    if dim_local not in (2, 3):
        raise ValueError("dim_local must be 2 or 3")
    gens = _generators(dim_local, n_sites)
    seen: dict[tuple, StateVector] = {}
    frontier = []
    for idx in range(dim_local**n_sites):
        st = StateVector.basis(dim_local, n_sites, idx)
        key = _canonical_key(st.amps)
        seen[key] = st
        frontier.append(st)
    while frontier:
        new = []
        for st in frontier:
            for g in gens:
                nxt = apply_gate(st, g)
                key = _canonical_key(nxt.amps)
                if key not in seen:
                    seen[key] = nxt
                    new.append(nxt)
        frontier = new
    return list(seen.values())


def stabilizer_count(dim_local: int, n_sites: int) -> int:
    count = dim_local**n_sites
    for k in range(1, n_sites + 1):
        count *= dim_local**k + 1
    return count
