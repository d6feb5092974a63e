"""Named gate library and circuits for qubit and qutrit registers.

Two-qudit gate matrices are written in the basis where the first listed
target is the least significant digit of the matrix index (matching the
register convention: site 0 least significant).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .pauli import OMEGA
from .state import StateVector

_SQ2 = 1 / np.sqrt(2)


def _rot(axis: np.ndarray, theta: float) -> np.ndarray:
    from scipy.linalg import expm

    return expm(-0.5j * theta * axis)


def _embed3(block2: np.ndarray, i: int, j: int) -> np.ndarray:
    """Embed a 2x2 block into levels (i, j) of a 3x3 identity."""
    m = np.eye(3, dtype=complex)
    m[i, i], m[i, j] = block2[0, 0], block2[0, 1]
    m[j, i], m[j, j] = block2[1, 0], block2[1, 1]
    return m


def _controlled_shift(d: int, power_sign: int = 1) -> np.ndarray:
    """CX on qudits: |x,y> -> |x, y + power_sign*x mod d>; control is the
    first target (least significant digit)."""
    m = np.zeros((d * d, d * d), dtype=complex)
    for x in range(d):
        for y in range(d):
            m[x + d * ((y + power_sign * x) % d), x + d * y] = 1.0
    return m


def _qudit_cz(d: int) -> np.ndarray:
    if d == 2:
        return np.diag([1.0, 1, 1, -1]).astype(complex)
    return np.diag([OMEGA ** (i * j) for j in range(d) for i in range(d)]).astype(complex)


def _swap(d: int) -> np.ndarray:
    m = np.zeros((d * d, d * d), dtype=complex)
    for a in range(d):
        for b in range(d):
            m[b + d * a, a + d * b] = 1.0
    return m


_PX = np.array([[0, 1], [1, 0]], dtype=complex)
_PY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_PZ = np.diag([1.0, -1.0]).astype(complex)
_X3 = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)
_Z3 = np.diag([1, OMEGA, OMEGA**2]).astype(complex)
_H3 = np.array([[1, 1, 1], [1, OMEGA, OMEGA**2], [1, OMEGA**2, OMEGA]]) / np.sqrt(3)
_SX01 = _embed3(_PX, 0, 1)
_SX12 = _embed3(_PX, 1, 2)
_SY01 = _embed3(_PY, 0, 1)
_SY12 = _embed3(_PY, 1, 2)

# name -> (dim_local, n_targets, n_params, matrix function)
GATE_DEFS = {
    # qubit gates
    "x": (2, 1, 0, lambda p: _PX),
    "y": (2, 1, 0, lambda p: _PY),
    "z": (2, 1, 0, lambda p: _PZ),
    "h": (2, 1, 0, lambda p: _SQ2 * np.array([[1, 1], [1, -1]], dtype=complex)),
    "s": (2, 1, 0, lambda p: np.diag([1, 1j]).astype(complex)),
    "sdg": (2, 1, 0, lambda p: np.diag([1, -1j]).astype(complex)),
    "t": (2, 1, 0, lambda p: np.diag([1, np.exp(1j * np.pi / 4)])),
    "tdg": (2, 1, 0, lambda p: np.diag([1, np.exp(-1j * np.pi / 4)])),
    "rx": (2, 1, 1, lambda p: _rot(_PX, p[0])),
    "ry": (2, 1, 1, lambda p: _rot(_PY, p[0])),
    "rz": (2, 1, 1, lambda p: _rot(_PZ, p[0])),
    "cnot": (2, 2, 0, lambda p: _controlled_shift(2)),
    "cz": (2, 2, 0, lambda p: _qudit_cz(2)),
    "swap": (2, 2, 0, lambda p: _swap(2)),
    "fswap": (2, 2, 0, lambda p: _swap(2) @ _qudit_cz(2)),
    "rzz": (2, 2, 1, lambda p: np.diag(np.exp(-0.5j * p[0] * np.array([1, -1, -1, 1])))),
    # qutrit gates
    "x3": (3, 1, 0, lambda p: _X3),
    "z3": (3, 1, 0, lambda p: _Z3),
    "h3": (3, 1, 0, lambda p: _H3),
    "s3": (3, 1, 0, lambda p: np.diag([1, 1, OMEGA]).astype(complex)),
    "t3": (3, 1, 0, lambda p: np.diag([1, np.exp(2j * np.pi / 9), np.exp(-2j * np.pi / 9)])),
    "ry01": (3, 1, 1, lambda p: _embed3(_rot(_PY, p[0]), 0, 1)),
    "ry12": (3, 1, 1, lambda p: _embed3(_rot(_PY, p[0]), 1, 2)),
    "ry02": (3, 1, 1, lambda p: _embed3(_rot(_PY, p[0]), 0, 2)),
    "rz01": (3, 1, 1, lambda p: np.diag(np.exp(1j * np.array([-p[0] / 2, p[0] / 2, 0.0])))),
    "rz02": (3, 1, 1, lambda p: np.diag(np.exp(1j * np.array([-p[0] / 2, 0.0, p[0] / 2])))),
    "rz12": (3, 1, 1, lambda p: np.diag(np.exp(1j * np.array([0.0, -p[0] / 2, p[0] / 2])))),
    "rx12": (3, 1, 1, lambda p: _embed3(_rot(_PX, p[0]), 1, 2)),
    "ph": (3, 1, 3, lambda p: np.diag(np.exp(1j * np.array(p)))),
    "cx3": (3, 2, 0, lambda p: _controlled_shift(3)),
    "cx3dg": (3, 2, 0, lambda p: _controlled_shift(3, -1)),
    "cz3": (3, 2, 0, lambda p: _qudit_cz(3)),
    "swap3": (3, 2, 0, lambda p: _swap(3)),
}


@dataclass(frozen=True)
class Gate:
    name: str
    targets: tuple
    params: tuple = ()
    custom_matrix: np.ndarray = None

    @classmethod
    def make(cls, name, targets, params=(), matrix=None):
        name = name.lower()
        targets = tuple(targets) if hasattr(targets, "__iter__") else (targets,)
        params = tuple(params) if hasattr(params, "__iter__") else (params,)
        if name == "unitary":
            if matrix is None:
                raise ValueError("custom unitary gate requires a matrix")
            return cls(name, targets, params, np.asarray(matrix, dtype=complex))
        if name not in GATE_DEFS:
            raise ValueError(f"unknown gate {name!r}")
        d, nt, npar, _ = GATE_DEFS[name]
        if len(targets) != nt:
            raise ValueError(f"gate {name} takes {nt} targets")
        if len(params) != npar:
            raise ValueError(f"gate {name} takes {npar} parameters")
        return cls(name, targets, params)

    @property
    def dim_local(self) -> int:
        if self.name == "unitary":
            return round(self.custom_matrix.shape[0] ** (1 / len(self.targets)))
        return GATE_DEFS[self.name][0]

    def matrix(self) -> np.ndarray:
        if self.name == "unitary":
            return self.custom_matrix
        return GATE_DEFS[self.name][3](self.params)

    def is_two_qudit(self) -> bool:
        return len(self.targets) >= 2


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    if gate.name != "unitary" and gate.dim_local != state.dim_local:
        raise ValueError(f"gate {gate.name} acts on d={gate.dim_local}, register is d={state.dim_local}")
    return state.apply_matrix(gate.matrix(), gate.targets)


@dataclass
class Circuit:
    n_sites: int
    dim_local: int = 2
    gates: list = field(default_factory=list)

    def add(self, name, targets, params=(), matrix=None) -> "Circuit":
        self.gates.append(Gate.make(name, targets, params, matrix))
        return self

    def extend(self, other: "Circuit") -> "Circuit":
        self.gates.extend(other.gates)
        return self

    def inverse(self) -> "Circuit":
        inv = Circuit(self.n_sites, self.dim_local)
        for g in reversed(self.gates):
            inv.gates.append(Gate("unitary", g.targets, (), g.matrix().conj().T))
        return inv

    def two_qudit_count(self) -> int:
        return sum(1 for g in self.gates if g.is_two_qudit())

    def two_qudit_depth(self) -> int:
        """Depth counting only multi-qudit gates (single-qudit gates free)."""
        level = {}
        depth = 0
        for g in self.gates:
            if not g.is_two_qudit():
                continue
            lvl = max(level.get(t, 0) for t in g.targets) + 1
            for t in g.targets:
                level[t] = lvl
            depth = max(depth, lvl)
        return depth

    def unitary(self) -> np.ndarray:
        dim = self.dim_local**self.n_sites
        u = np.eye(dim, dtype=complex)
        for col in range(dim):
            st = StateVector.basis(self.dim_local, self.n_sites, col)
            st = run_circuit(st, self)
            u[:, col] = st.amps
        return u

    # serialization: one gate per line, ``gate_name targets... params...``
    def dumps(self) -> str:
        lines = []
        for g in self.gates:
            if g.name == "unitary":
                raise ValueError("custom unitary gates are not serializable")
            parts = [g.name] + [str(t) for t in g.targets] + [f"{p:.17g}" for p in g.params]
            lines.append(" ".join(parts))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def loads(cls, text: str, n_sites: int, dim_local: int = 2) -> "Circuit":
        circ = cls(n_sites, dim_local)
        for line in text.splitlines():
            if not line.strip():
                continue
            parts = line.split()
            name = parts[0]
            _, nt, npar, _f = GATE_DEFS[name]
            targets = [int(x) for x in parts[1:1 + nt]]
            params = [float(x) for x in parts[1 + nt:1 + nt + npar]]
            circ.add(name, targets, params)
        return circ


def run_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    for g in circuit.gates:
        state = apply_gate(state, g)
    return state
