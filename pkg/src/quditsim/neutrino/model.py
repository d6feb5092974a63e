"""Hamiltonians and time evolution for dense neutrino systems.

Mass-basis one-body term per neutrino (identity part dropped):

    H_1 = -(omega/2) lam_3 + (omega - 2 Omega)/(2 sqrt 3) lam_8,

two-body coherent forward scattering summed over pairs:

    H_2 = sum_{i<j} J_ij  lam^(i) . lam^(j),

with J_ij = (mu/N)(1 - cos theta_ij) for the fixed-coupling cone model, or
J_ij(t) = mu(r(t))/4 (flavor-universal, T^a = lam^a/2) for the supernova
density profile.  Supernova runs use units of kappa = 1: distances carry a
factor kappa, times are kappa*t, and energies are in units of kappa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..core.state import StateVector
from .params import PmnsParams, pmns_matrix, two_flavor_matrix

_FLAVOR_INDEX = {"e": 0, "m": 1, "mu": 1, "t": 2, "tau": 2}

SUPERNOVA_DEFAULTS = {
    "mu0": 3.62e4,     # edge coupling, units of kappa
    "r_nu": 32.2,      # kappa * R_nu
    "r0": 210.65,      # kappa * r at t = 0
    "e0": 10.0,        # MeV, energy of the first neutrino; E_n = e0 / n
    "kappa": 1e-17,    # MeV
}


def gell_mann() -> list[np.ndarray]:
    """The eight Gell-Mann matrices in the standard order."""
    l1 = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    l2 = np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]])
    l3 = np.diag([1.0, -1.0, 0.0])
    l4 = np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]])
    l5 = np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]])
    l6 = np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]])
    l7 = np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]])
    l8 = np.diag([1.0, 1.0, -2.0]) / math.sqrt(3)
    return [m.astype(complex) for m in (l1, l2, l3, l4, l5, l6, l7, l8)]


def _pauli() -> list[np.ndarray]:
    return [
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.diag([1.0, -1.0]).astype(complex),
    ]


def su_generators(flavors: int) -> list[np.ndarray]:
    if flavors == 2:
        return _pauli()
    if flavors == 3:
        return gell_mann()
    raise ValueError("flavors must be 2 or 3")


def cone_angles(n: int) -> np.ndarray:
    """Pair angles theta_ij = |i-j|/(N-1) arccos(0.9), N >= 2."""
    if n < 2:
        raise ValueError("need at least two neutrinos")
    idx = np.arange(n)
    return np.abs(idx[:, None] - idx[None, :]) / (n - 1) * math.acos(0.9)


def supernova_mu(t: float, model: dict | None = None) -> float:
    """Two-body coupling mu(r(t)) with r = r0 + t (kappa units)."""
    m = {**SUPERNOVA_DEFAULTS, **(model or {})}
    r = m["r0"] + t
    x = m["r_nu"] / r
    return m["mu0"] * (1.0 - math.sqrt(1.0 - x * x)) ** 2


@dataclass(frozen=True)
class NeutrinoSystemSpec:
    """A system of n neutrinos with 2 or 3 flavors.

    coupling "cone": fixed mu, per-pair cone angles, equal energies.
    coupling "supernova": time-dependent mu(r(t)), flavor-universal pairs,
    per-neutrino energies E_k = e0/k so the one-body term of neutrino k is
    scaled by (k+1) for zero-based k.
    """

    n: int
    flavors: int = 3
    params: PmnsParams = field(default_factory=PmnsParams.nufit)
    basis: str = "mass"
    coupling: str = "cone"
    mu: float = 1.0
    supernova: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.flavors not in (2, 3):
            raise ValueError("flavors must be 2 or 3")
        if self.basis not in ("mass", "flavor"):
            raise ValueError("basis must be 'mass' or 'flavor'")
        if self.coupling not in ("cone", "supernova"):
            raise ValueError("coupling must be 'cone' or 'supernova'")

    @property
    def dim_local(self) -> int:
        return self.flavors

    def frequencies(self) -> tuple[float, float]:
        """(omega, Omega) of the first neutrino, in the run's units."""
        if self.coupling == "supernova":
            m = {**SUPERNOVA_DEFAULTS, **self.supernova}
            scale = 2.0 * m["e0"] * m["kappa"]
        else:
            # mu = dm2_31 N / (2E) fixes the time unit: Omega = mu / N
            scale = self.params.dm2_31 * self.n / self.mu
        return self.params.dm2_21 / scale, self.params.dm2_31 / scale

    def one_body_weight(self, i: int) -> float:
        """Energy weight of neutrino i (E_k = e0/k for the supernova model)."""
        return float(i + 1) if self.coupling == "supernova" else 1.0

    def mixing(self) -> np.ndarray:
        return (pmns_matrix(self.params) if self.flavors == 3
                else two_flavor_matrix(self.params))

    def pair_couplings(self, t: float = 0.0) -> dict[tuple[int, int], float]:
        """J_ij for all i < j at time t."""
        out = {}
        if self.coupling == "cone":
            th = cone_angles(self.n)
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    out[(i, j)] = self.mu / self.n * (1.0 - math.cos(th[i, j]))
        else:
            j = supernova_mu(t, self.supernova) / 4.0  # T^a = lam^a / 2
            for a in range(self.n):
                for b in range(a + 1, self.n):
                    out[(a, b)] = j
        return out

    def flavor_state(self, flavor: str) -> np.ndarray:
        """Single-neutrino amplitudes of a flavor eigenstate in spec.basis."""
        a = _FLAVOR_INDEX[flavor]
        if a >= self.flavors:
            raise ValueError(f"flavor {flavor!r} not available with {self.flavors} flavors")
        if self.basis == "flavor":
            v = np.zeros(self.flavors, dtype=complex)
            v[a] = 1.0
            return v
        return self.mixing()[a].conj()

    def initial_state(self, flavor_string: str) -> StateVector:
        """Tensor product of flavor eigenstates, site i = i-th character."""
        labels = _parse_flavors(flavor_string)
        if len(labels) != self.n:
            raise ValueError("flavor string length must equal n")
        amps = np.ones(1, dtype=complex)
        for lab in labels:
            amps = np.kron(self.flavor_state(lab), amps)
        return StateVector(self.flavors, self.n, amps)


def _parse_flavors(s: str) -> list[str]:
    out = []
    for ch in s.replace("ν", ""):
        if ch in ("e", "m", "t"):
            out.append(ch)
        elif ch in ("μ",):
            out.append("m")
        elif ch in ("τ",):
            out.append("t")
        elif ch not in (" ", ","):
            raise ValueError(f"unknown flavor character {ch!r}")
    return out


def one_body_hamiltonian(spec: NeutrinoSystemSpec, i: int) -> np.ndarray:
    """Traceless one-body matrix of neutrino i, in spec.basis."""
    if not 0 <= i < spec.n:
        raise ValueError("neutrino index out of range")
    omega, big = spec.frequencies()
    if spec.flavors == 2:
        h = np.diag([0.0, omega]).astype(complex)
        h -= np.trace(h) / 2 * np.eye(2)
    else:
        gens = gell_mann()
        h = -omega / 2 * gens[2] + (omega - 2 * big) / (2 * math.sqrt(3)) * gens[7]
    h = spec.one_body_weight(i) * h
    if spec.basis == "flavor":
        u = spec.mixing()
        h = u @ h @ u.conj().T
    return h


def two_body_pair(flavors: int = 3) -> np.ndarray:
    """sum_a lam_a (x) lam_a on one pair (d*d x d*d, either site ordering)."""
    gens = su_generators(flavors)
    d = flavors
    out = np.zeros((d * d, d * d), dtype=complex)
    for g in gens:
        out += np.kron(g, g)
    return out


def two_body_hamiltonian(spec: NeutrinoSystemSpec, t: float = 0.0) -> np.ndarray:
    """Dense H_2 on the full register at time t (basis independent)."""
    if spec.n < 2:
        raise ValueError("two-body term needs n >= 2")
    d = spec.flavors
    dim = d**spec.n
    pair = two_body_pair(spec.flavors)
    h = np.zeros((dim, dim), dtype=complex)
    probe = StateVector(d, spec.n, np.zeros(dim, dtype=complex))
    for (i, j), coupling in spec.pair_couplings(t).items():
        mat = coupling * pair
        for col in range(dim):
            probe.amps[:] = 0
            probe.amps[col] = 1.0
            h[:, col] += probe.apply_matrix(mat, (i, j)).amps
    return h


def full_hamiltonian(spec: NeutrinoSystemSpec, t: float = 0.0) -> np.ndarray:
    """Dense H_1 + H_2 on the full register at time t."""
    d = spec.flavors
    dim = d**spec.n
    h = np.zeros((dim, dim), dtype=complex)
    for i in range(spec.n):
        h1 = one_body_hamiltonian(spec, i)
        left = np.eye(d ** (spec.n - 1 - i))
        right = np.eye(d**i)
        h += np.kron(left, np.kron(h1, right))
    if spec.n >= 2:
        h += two_body_hamiltonian(spec, t)
    return h


def _expm_herm(h: np.ndarray, t: float) -> np.ndarray:
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * t * w)) @ v.conj().T


def evolve_neutrinos(
    spec: NeutrinoSystemSpec,
    initial: str | StateVector,
    t_final: float,
    dt: float = 0.05,
    method: str = "exact-stepped",
    order: int = 1,
    sample_every: int = 1,
):
    """Evolve an initial flavor product state to t_final on a fixed grid.

    "exact-stepped": per-step expm of the full Hamiltonian, evaluated at the
    step midpoint for the time-dependent supernova coupling.
    "trotter": one-body phases plus per-pair two-body factors in the swap
    network ordering (order 1) or its symmetrized form (order 2).

    Returns (times, states); states[k] is the state after times[k].
    """
    if method not in ("exact-stepped", "trotter"):
        raise ValueError("method must be 'exact-stepped' or 'trotter'")
    psi = spec.initial_state(initial) if isinstance(initial, str) else initial
    n_steps = int(round(t_final / dt))
    d = spec.flavors

    times = [0.0]
    states = [psi]
    if method == "exact-stepped":
        static = spec.coupling == "cone"
        u_cache = _expm_herm(full_hamiltonian(spec, 0.0), dt) if static else None
        for k in range(n_steps):
            t_mid = (k + 0.5) * dt
            u = u_cache if static else _expm_herm(full_hamiltonian(spec, t_mid), dt)
            psi = StateVector(d, spec.n, u @ psi.amps)
            if (k + 1) % sample_every == 0 or k == n_steps - 1:
                times.append((k + 1) * dt)
                states.append(psi)
        return np.array(times), states

    # Trotterized evolution with precomputed pair eigenbasis.
    u1 = [_expm_herm(one_body_hamiltonian(spec, i), dt) for i in range(spec.n)]
    pair = two_body_pair(spec.flavors)
    w_pair, v_pair = np.linalg.eigh(pair)

    def pair_unitary(theta: float) -> np.ndarray:
        return (v_pair * np.exp(-1j * theta * w_pair)) @ v_pair.conj().T

    from .circuits import swap_network_order

    order_fwd = swap_network_order(spec.n)
    for k in range(n_steps):
        t_mid = (k + 0.5) * dt
        couplings = spec.pair_couplings(t_mid)
        if order == 1:
            for i in range(spec.n):
                psi = psi.apply_matrix(u1[i], (i,))
            for (a, b) in order_fwd:
                psi = psi.apply_matrix(pair_unitary(couplings[(a, b)] * dt), (a, b))
        else:
            for (a, b) in order_fwd:
                psi = psi.apply_matrix(pair_unitary(couplings[(a, b)] * dt / 2), (a, b))
            for i in range(spec.n):
                psi = psi.apply_matrix(u1[i], (i,))
            for (a, b) in reversed(order_fwd):
                psi = psi.apply_matrix(pair_unitary(couplings[(a, b)] * dt / 2), (a, b))
        if (k + 1) % sample_every == 0 or k == n_steps - 1:
            times.append((k + 1) * dt)
            states.append(psi)
    return np.array(times), states
