"""Gate-level constructions of the Trotter-step building blocks.

Hopping terms are compiled with an outer CNOT conjugation that reduces
exp(-i theta (s+ Z..Z s- + h.c.)) to two commuting diagonal exponentials,
costing 2s+4 CNOTs for s string qubits (or 6 with a parity ancilla).  The
off-diagonal chromoelectric blocks are diagonalized by a GHZ-preparation
basis change; in that frame the eight Pauli strings become Z strings that
share a Gray-code CNOT walk on one wire, and most color ZZ rotations
collapse to free single-qubit rotations.
"""

from __future__ import annotations

import numpy as np

from ..core.gates import Circuit
from ..lattice.build import build_mass_term

# Diagonal image of s+ s- s- s+ + h.c. in the GHZ frame: subsets of the
# block wires {0, 1, 3} XORed onto wire 2, with signs, each weighted 1/8.
_PMMP_DIAG = (
    (frozenset(), 1),
    (frozenset({0}), 1),
    (frozenset({0, 1}), 1),
    (frozenset({1}), 1),
    (frozenset({1, 3}), -1),
    (frozenset({0, 1, 3}), -1),
    (frozenset({0, 3}), -1),
    (frozenset({3}), -1),
)

# ZZ pairs that the GHZ frame maps to a single Z, and where.
_ZZ_IMAGE = {(0, 3): 0, (1, 2): 1, (1, 3): 3}


def _ghz_open(circ, q):
    circ.add("cnot", [q[3], q[0]])
    circ.add("cnot", [q[1], q[3]])
    circ.add("cnot", [q[2], q[1]])
    circ.add("h", [q[2]])


def _ghz_close(circ, q):
    circ.add("h", [q[2]])
    circ.add("cnot", [q[2], q[1]])
    circ.add("cnot", [q[1], q[3]])
    circ.add("cnot", [q[3], q[0]])


def zz_rotation(circ, a, b, phi):
    """Append exp(-i phi Z_a Z_b)."""
    circ.add("cnot", [a, b])
    circ.add("rz", [b], [2 * phi])
    circ.add("cnot", [a, b])


def hop_circuit(circ, i, j, theta):
    """Append exp(-i theta (s+_i Z...Z s-_j + h.c.)), string over (i, j)."""
    if not i < j:
        raise ValueError("hop endpoints must be ordered")
    inner = range(i + 1, j)
    circ.add("cnot", [i, j])
    circ.add("h", [i])
    for k in inner:
        circ.add("cnot", [k, i])
    circ.add("rz", [i], [theta])
    circ.add("cnot", [j, i])
    circ.add("rz", [i], [-theta])
    circ.add("cnot", [j, i])
    for k in reversed(inner):
        circ.add("cnot", [k, i])
    circ.add("h", [i])
    circ.add("cnot", [i, j])


def _hop_core_ancilla(circ, i, j, anc, theta):
    # same algebra as hop_circuit with the string parity held on anc
    circ.add("cnot", [i, j])
    circ.add("h", [i])
    circ.add("cnot", [anc, i])
    circ.add("rz", [i], [theta])
    circ.add("cnot", [j, i])
    circ.add("rz", [i], [-theta])
    circ.add("cnot", [j, i])
    circ.add("cnot", [anc, i])
    circ.add("h", [i])
    circ.add("cnot", [i, j])


def kinetic_circuit(n_qubits, hops, t, style="direct"):
    """Circuit for prod_hops exp(-i t/2 (s+ Z..Z s- + h.c.)).

    ``hops`` is a sequence of ordered qubit pairs; the Jordan-Wigner string
    runs over the wires strictly between them.  The ancilla style appends
    one extra wire that accumulates the string parity and is returned to
    |0>, re-using partial parities between consecutive hops.
    """
    theta = t / 2
    if style == "direct":
        circ = Circuit(n_qubits, 2)
        for i, j in hops:
            hop_circuit(circ, i, j, theta)
        return circ
    if style != "ancilla":
        raise ValueError(f"unknown kinetic style {style!r}")
    anc = n_qubits
    circ = Circuit(n_qubits + 1, 2)
    parity = set()
    for i, j in hops:
        want = set(range(i + 1, j))
        for k in sorted(parity ^ want):
            circ.add("cnot", [k, anc])
        parity = want
        _hop_core_ancilla(circ, i, j, anc, theta)
    for k in sorted(parity):
        circ.add("cnot", [k, anc])
    return circ


def pmmp_circuit(circ, quartet, theta, zmids=(), zz_phis=(), pattern="pmmp"):
    """Append exp(-i theta (s+ s- s- s+ + h.c.)) on ``quartet``.

    ``zmids`` lists wires carrying a bare Z factor in every string (the
    6-qubit chromoelectric variant).  ``zz_phis`` is a sequence of
    ((a, b), phi) pairs, with a, b indices *into the quartet*, absorbed as
    free rotations in the GHZ frame; only pairs in the collapsing set are
    accepted.  ``pattern="pmpm"`` conjugates wires 2 and 3 by X, turning
    the block into s+ s- s+ s- + h.c.
    """
    q = list(quartet)
    flip = pattern == "pmpm"
    if flip and zz_phis:
        raise ValueError("ZZ absorption is only supported for pmmp blocks")
    if flip:
        circ.add("x", [q[2]])
        circ.add("x", [q[3]])
    _ghz_open(circ, q)
    for (a, b), phi in zz_phis:
        key = (a, b) if (a, b) in _ZZ_IMAGE else (b, a)
        circ.add("rz", [q[_ZZ_IMAGE[key]]], [2 * phi])
    for z in zmids:
        circ.add("cnot", [z, q[2]])
    cur = frozenset()
    for subset, sign in _PMMP_DIAG:
        for w in cur ^ subset:
            circ.add("cnot", [q[w], q[2]])
        cur = subset
        circ.add("rz", [q[2]], [sign * theta / 4])
    for w in cur:
        circ.add("cnot", [q[w], q[2]])
    for z in reversed(list(zmids)):
        circ.add("cnot", [z, q[2]])
    _ghz_close(circ, q)
    if flip:
        circ.add("x", [q[2]])
        circ.add("x", [q[3]])


def diagonal_lambda_matrix(nc):
    """S[c, c'] = sum over diagonal generators a of lambda^a_cc lambda^a_c'c'."""
    gens = []
    for k in range(1, nc):
        d = np.zeros(nc)
        d[:k] = 1.0
        d[k] = -k
        gens.append(d * np.sqrt(2.0 / (k * (k + 1))))
    s = np.zeros((nc, nc))
    for d in gens:
        s += np.outer(d, d)
    return s


def chromoelectric_circuit(circ, slot_i, slot_j, alpha, nc=3):
    """Append the Trotterized exp(-8i alpha Q_i . Q_j) for two site-flavor slots.

    ``slot_i`` and ``slot_j`` are base qubit indices of the two color
    multiplets (each occupying ``nc`` consecutive wires).  Off-diagonal
    color pairs become GHZ-diagonalized blocks; the color ZZ rotations are
    folded into whichever block maps them to a single-qubit rotation, the
    remainder (SU(2) same-color pairs) kept as explicit ZZ rotations.
    For a time step t of H_el the angle is alpha = t g^2 / 8 per unit
    pair weight.
    """
    if slot_i == slot_j:
        # Q.Q on one slot is the quadratic Casimir of the occupation,
        # a constant plus -(nc+1)/(4 nc) on every color ZZ pair
        phi_c = -2.0 * alpha * (nc + 1) / nc
        for c in range(nc):
            for cp in range(c + 1, nc):
                zz_rotation(circ, slot_i + c, slot_i + cp, phi_c)
        return
    s = diagonal_lambda_matrix(nc)
    phi = lambda c, cp: alpha * s[c, cp] / 2  # noqa: E731  both slot orders
    if nc == 2:
        quartet = (slot_i, slot_i + 1, slot_j, slot_j + 1)
        zz = [((0, 3), phi(0, 1)), ((1, 2), phi(1, 0))]
        pmmp_circuit(circ, quartet, 4 * alpha, zz_phis=zz)
        zz_rotation(circ, slot_i, slot_j, phi(0, 0))
        zz_rotation(circ, slot_i + 1, slot_j + 1, phi(1, 1))
        return
    if nc != 3:
        raise ValueError("chromoelectric blocks are built for nc in (2, 3)")
    # orientation (c, c') per block chosen so the three free ZZ slots cover
    # all nine color pairs: (r,g) hosts gg, (g,b) hosts bb, (b,r) hosts rr
    for c, cp in ((0, 1), (1, 2), (2, 0)):
        quartet = (slot_i + c, slot_i + cp, slot_j + c, slot_j + cp)
        mids = []
        if abs(c - cp) == 2:  # the skipped color carries a bare Z at each slot
            mid = 3 - c - cp
            mids = [slot_i + mid, slot_j + mid]
        zz = [
            ((0, 3), phi(c, cp)),
            ((1, 2), phi(cp, c)),
            ((1, 3), phi(cp, cp)),
        ]
        pmmp_circuit(circ, quartet, 4 * alpha, zmids=mids, zz_phis=zz)


def diagonal_circuit(circ, op, t):
    """Append exp(-i t op) for an operator with only I/Z factors."""
    for term in op.terms:
        wires = sorted(term.sites())
        if any(term.factor_map[w] != "Z" for w in wires):
            raise ValueError("operator is not diagonal")
        c = term.coefficient
        if abs(c.imag) > 1e-12:
            raise ValueError("diagonal coefficients must be real")
        if not wires:
            continue  # identity: global phase
        if len(wires) == 1:
            circ.add("rz", wires, [2 * t * c.real])
            continue
        tgt = wires[-1]
        for w in wires[:-1]:
            circ.add("cnot", [w, tgt])
        circ.add("rz", [tgt], [2 * t * c.real])
        for w in reversed(wires[:-1]):
            circ.add("cnot", [w, tgt])
    return circ


def mass_circuit(spec, t, n_qubits=None):
    """One diagonal layer exp(-i t H_m)."""
    nq = n_qubits or spec.quark_width
    circ = Circuit(nq, 2)
    diagonal_circuit(circ, build_mass_term(spec, n_qubits=nq), t)
    return circ


def electric_circuit(spec, t, n_qubits=None):
    """One layer exp(-i t g^2/2 sum_nm w_nm Q_n.Q_m) Trotterized per slot pair.

    Cross-slot pairs carry weight 2w (both orders of the double sum), same
    slots weight w; each pair compiles to the GHZ-diagonalized block set.
    """
    from .trotter import electric_slot_weights

    nq = n_qubits or spec.quark_width
    nc = spec.n_colors
    circ = Circuit(nq, 2)
    for (i, j), w in sorted(electric_slot_weights(spec).items()):
        alpha = t * spec.g**2 * w / 16.0
        qi = spec.qubit(i[0], i[1], 0)
        qj = spec.qubit(j[0], j[1], 0)
        chromoelectric_circuit(circ, qi, qj, alpha, nc=nc)
    return circ


def trotter_step_circuit(spec, t, style="direct"):
    """One first-order Trotter step of the quark Hamiltonian as a circuit.

    The one-flavor plan applies the chromoelectric layer before the kinetic
    one; with more flavors the kinetic layer comes first.  The ancilla
    kinetic style widens the register by one wire.
    """
    from .trotter import kinetic_hop_pairs

    nq = spec.quark_width
    kin = kinetic_circuit(nq, kinetic_hop_pairs(spec), t, style=style)
    circ = Circuit(kin.n_sites, 2)
    circ.extend(mass_circuit(spec, t, n_qubits=circ.n_sites))
    if spec.n_flavors == 1:
        circ.extend(electric_circuit(spec, t, n_qubits=circ.n_sites))
        circ.extend(kin)
    else:
        circ.extend(kin)
        circ.extend(electric_circuit(spec, t, n_qubits=circ.n_sites))
    return circ


def beta_circuit(spec, l, c, alpha):
    """exp(-i 8 alpha B_c) for one color channel of the valence weak term.

    B_c = (1/8)(sigma+_u,c Z Z sigma-_d,c sigma+_e sigma-_nu + h.c.) up to
    the block normalization: the circuit realizes the per-color valence
    four-Fermi factor with rotation angle alpha = sqrt(2) G t / 8 for a
    time step t at coupling G.
    """
    from ..lattice.electroweak import ElectroweakLayout

    if l != 0:
        raise ValueError("valence weak blocks live on the single-cell lattice")
    lay = ElectroweakLayout(spec)
    circ = Circuit(lay.n_qubits, 2)
    u = lay.quark(0, 0, c)
    d = lay.quark(0, 1, c)
    e = lay.lepton(0, "e")
    nu = lay.lepton(1, "nu")
    mids = list(range(u + 1, d))
    pmmp_circuit(circ, (u, d, e, nu), 4 * alpha, zmids=mids, pattern="pmpm")
    return circ


def valence_beta_step(spec, t):
    """One first-order Trotter step of the valence weak term, color by color."""
    import math

    alpha = math.sqrt(2.0) * spec.G_weak * t / 8.0
    circ = None
    for c in range(spec.n_colors):
        blk = beta_circuit(spec, 0, c, alpha)
        circ = blk if circ is None else circ.extend(blk)
    return circ
