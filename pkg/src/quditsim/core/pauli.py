"""Weighted tensor products of single-qudit Pauli operators.

Qubit factors are labeled I, X, Y, Z. Qutrit factors are the nine shift/clock
words (with their canonical phase prefixes)

    I, X, Z, X2, wXZ, Z2, w2XZ2, X2Z, X2Z2,      w = exp(2 pi i / 3),

normalized so that Tr P_i P_j = 3 exactly when j is the conjugate partner of
i (the K-metric), and 0 otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

OMEGA = np.exp(2j * np.pi / 3)

_PAULI_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# single-qubit products: table[(a,b)] = (phase, c) with a.b = phase*c
_MUL_1Q = {}
for _a in "IXYZ":
    for _b in "IXYZ":
        _m = _PAULI_1Q[_a] @ _PAULI_1Q[_b]
        for _c in "IXYZ":
            for _ph in (1, -1, 1j, -1j):
                if np.allclose(_m, _ph * _PAULI_1Q[_c]):
                    _MUL_1Q[(_a, _b)] = (_ph, _c)

_X3 = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)  # X|j> = |j+1>
_Z3 = np.diag([1, OMEGA, OMEGA**2]).astype(complex)

# canonical qutrit words: label -> (phase, x_power, z_power)
_QUTRIT_WORDS = {
    "I": (1, 0, 0),
    "X": (1, 1, 0),
    "Z": (1, 0, 1),
    "X2": (1, 2, 0),
    "wXZ": (OMEGA, 1, 1),
    "Z2": (1, 0, 2),
    "w2XZ2": (OMEGA**2, 1, 2),
    "X2Z": (1, 2, 1),
    "X2Z2": (1, 2, 2),
}
QUTRIT_LABELS = list(_QUTRIT_WORDS)  # fixed deterministic order, identity first

_QUTRIT_BY_XZ = {(a, b): lab for lab, (_, a, b) in _QUTRIT_WORDS.items()}


def qutrit_op_matrix(label: str) -> np.ndarray:
    phase, a, b = _QUTRIT_WORDS[label]
    return phase * np.linalg.matrix_power(_X3, a) @ np.linalg.matrix_power(_Z3, b)


_QUTRIT_MATS = {lab: qutrit_op_matrix(lab) for lab in QUTRIT_LABELS}


def _mul_qutrit(a: str, b: str) -> tuple[complex, str]:
    pa, xa, za = _QUTRIT_WORDS[a]
    pb, xb, zb = _QUTRIT_WORDS[b]
    # Z^za X^xb = w^(za*xb) X^xb Z^za
    phase = pa * pb * OMEGA ** (za * xb)
    x, z = (xa + xb) % 3, (za + zb) % 3
    lab = _QUTRIT_BY_XZ[(x, z)]
    pl, _, _ = _QUTRIT_WORDS[lab]
    return phase / pl, lab


def factor_matrix(dim_local: int, label: str) -> np.ndarray:
    if dim_local == 2:
        return _PAULI_1Q[label]
    return _QUTRIT_MATS[label]


@dataclass(frozen=True)
class PauliTerm:
    """coefficient * tensor product of single-qudit operators.

    ``factors`` maps site -> label; identity factors are omitted.
    """

    coefficient: complex
    factors: tuple  # sorted tuple of (site, label)

    @classmethod
    def make(cls, coefficient: complex, factors: dict | None = None) -> "PauliTerm":
        factors = factors or {}
        items = tuple(sorted((s, l) for s, l in factors.items() if l != "I"))
        return cls(complex(coefficient), items)

    @property
    def factor_map(self) -> dict:
        return dict(self.factors)

    def sites(self):
        return [s for s, _ in self.factors]

    def key(self):
        return self.factors

    def dagger(self, dim_local: int) -> "PauliTerm":
        if dim_local == 2:
            return PauliTerm(self.coefficient.conjugate(), self.factors)
        out = {}
        coeff = self.coefficient.conjugate()
        for s, lab in self.factors:
            m = _QUTRIT_MATS[lab].conj().T
            for lab2 in QUTRIT_LABELS:
                for ph in (1, OMEGA, OMEGA**2, -1, -OMEGA, -OMEGA**2):
                    if np.allclose(m, ph * _QUTRIT_MATS[lab2]):
                        coeff *= ph
                        out[s] = lab2
                        break
                else:
                    continue
                break
        return PauliTerm.make(coeff, out)

    def mul(self, other: "PauliTerm", dim_local: int) -> "PauliTerm":
        coeff = self.coefficient * other.coefficient
        a, b = self.factor_map, other.factor_map
        out = {}
        for s in set(a) | set(b):
            la, lb = a.get(s, "I"), b.get(s, "I")
            if dim_local == 2:
                ph, lc = _MUL_1Q[(la, lb)]
            else:
                ph, lc = _mul_qutrit(la, lb)
            coeff *= ph
            if lc != "I":
                out[s] = lc
        return PauliTerm.make(coeff, out)


class OperatorSum:
    """Sum of PauliTerms over a register of n_sites qudits."""

    def __init__(self, dim_local: int, n_sites: int, terms=()):
        self.dim_local = dim_local
        self.n_sites = n_sites
        self.terms: list[PauliTerm] = list(terms)
        self._sparse = None

    # ---- construction helpers -----------------------------------------

    @classmethod
    def zero(cls, dim_local: int, n_sites: int) -> "OperatorSum":
        return cls(dim_local, n_sites)

    @classmethod
    def identity(cls, dim_local: int, n_sites: int, coeff=1.0) -> "OperatorSum":
        return cls(dim_local, n_sites, [PauliTerm.make(coeff)])

    @classmethod
    def from_ladder(cls, dim_local: int, n_sites: int, coeff, factors: dict) -> "OperatorSum":
        """Term with qubit ladder operators: labels may include '+', '-', 'N'
        (number operator (1-Z)/2 with |1> occupied), besides I,X,Y,Z."""
        if dim_local != 2:
            raise ValueError("ladder construction is qubit-only")
        # occupation convention: |1> = occupied, Z|1> = -|1>.
        # '+' is the creation operator (|0> -> |1>), '-' annihilation.
        expansions = {
            "+": [(0.5, "X"), (-0.5j, "Y")],
            "-": [(0.5, "X"), (0.5j, "Y")],
            "N": [(0.5, "I"), (-0.5, "Z")],
        }
        terms = [(complex(coeff), {})]
        for site, lab in sorted(factors.items()):
            if lab in expansions:
                new = []
                for c0, f0 in terms:
                    for c1, l1 in expansions[lab]:
                        f = dict(f0)
                        if l1 != "I":
                            f[site] = l1
                        new.append((c0 * c1, f))
                terms = new
            elif lab == "I":
                continue
            else:
                for _, f0 in terms:
                    f0[site] = lab
        return cls(2, n_sites, [PauliTerm.make(c, f) for c, f in terms]).collect()

    # ---- algebra -------------------------------------------------------

    def _check(self, other):
        if (other.dim_local, other.n_sites) != (self.dim_local, self.n_sites):
            raise ValueError("operator register mismatch")

    def __add__(self, other: "OperatorSum") -> "OperatorSum":
        self._check(other)
        return OperatorSum(self.dim_local, self.n_sites, self.terms + other.terms)

    def __sub__(self, other):
        return self + (other * -1.0)

    def __mul__(self, scalar) -> "OperatorSum":
        return OperatorSum(self.dim_local, self.n_sites,
                           [PauliTerm(t.coefficient * scalar, t.factors) for t in self.terms])

    __rmul__ = __mul__

    def matmul(self, other: "OperatorSum") -> "OperatorSum":
        self._check(other)
        out = [a.mul(b, self.dim_local) for a in self.terms for b in other.terms]
        return OperatorSum(self.dim_local, self.n_sites, out).collect()

    def __matmul__(self, other):
        return self.matmul(other)

    def dagger(self) -> "OperatorSum":
        return OperatorSum(self.dim_local, self.n_sites,
                           [t.dagger(self.dim_local) for t in self.terms]).collect()

    def collect(self, tol: float = 1e-14) -> "OperatorSum":
        acc = {}
        for t in self.terms:
            acc[t.key()] = acc.get(t.key(), 0.0) + t.coefficient
        terms = [PauliTerm(c, k) for k, c in sorted(acc.items()) if abs(c) > tol]
        return OperatorSum(self.dim_local, self.n_sites, terms)

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        diff = (self - self.dagger()).collect(tol)
        return not diff.terms

    # ---- matrices ------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.dim_local**self.n_sites

    def term_matrix(self, term: PauliTerm) -> sp.csr_matrix:
        d = self.dim_local
        if d == 2:
            return self._qubit_term_sparse(term)
        dim = self.dim
        mat = sp.identity(dim, dtype=complex, format="csr") * term.coefficient
        for s, lab in term.factors:
            left = sp.identity(d ** (self.n_sites - 1 - s), dtype=complex, format="csr")
            right = sp.identity(d**s, dtype=complex, format="csr")
            op = sp.kron(left, sp.kron(sp.csr_matrix(_QUTRIT_MATS[lab]), right), format="csr")
            mat = mat @ op
        return mat

    def _qubit_term_sparse(self, term: PauliTerm) -> sp.csr_matrix:
        dim = self.dim
        xmask = zmask = 0
        n_y = 0
        for s, lab in term.factors:
            if lab in ("X", "Y"):
                xmask |= 1 << s
            if lab in ("Z", "Y"):
                zmask |= 1 << s
            if lab == "Y":
                n_y += 1
        cols = np.arange(dim, dtype=np.int64)
        rows = cols ^ xmask
        # parity of popcount(cols & zmask) fixes the sign per column
        par = np.zeros(dim, dtype=np.int64)
        v = cols & zmask
        while v.max(initial=0) > 0:
            par += v & 1
            v = v >> 1
        vals = term.coefficient * (1j**n_y) * ((-1.0) ** (par % 2))
        return sp.csr_matrix((vals, (rows, cols)), shape=(dim, dim))

    def to_sparse(self) -> sp.csr_matrix:
        if self._sparse is None:
            dim = self.dim
            acc = sp.csr_matrix((dim, dim), dtype=complex)
            for t in self.terms:
                acc = acc + self.term_matrix(t)
            self._sparse = acc
        return self._sparse

    def to_matrix(self) -> np.ndarray:
        return np.asarray(self.to_sparse().todense())

    def apply(self, state):
        from .state import StateVector

        out = self.to_sparse() @ state.amps
        return StateVector(self.dim_local, self.n_sites, out)

    def expectation_of(self, state) -> complex:
        if state.dim != self.dim:
            raise ValueError("dimension mismatch")
        return complex(np.vdot(state.amps, self.to_sparse() @ state.amps))

    # ---- serialization -------------------------------------------------

    def dumps(self) -> str:
        """One term per line: ``coeff_re coeff_im site:op ...``."""
        lines = []
        for t in sorted(self.collect().terms, key=lambda t: t.factors):
            parts = [f"{t.coefficient.real:.17g}", f"{t.coefficient.imag:.17g}"]
            parts += [f"{s}:{lab}" for s, lab in t.factors]
            lines.append(" ".join(parts))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def loads(cls, text: str, dim_local: int, n_sites: int) -> "OperatorSum":
        terms = []
        for line in text.splitlines():
            if not line.strip():
                continue
            parts = line.split()
            coeff = complex(float(parts[0]), float(parts[1]))
            factors = {}
            for p in parts[2:]:
                s, lab = p.split(":")
                factors[int(s)] = lab
            terms.append(PauliTerm.make(coeff, factors))
        return cls(dim_local, n_sites, terms)


def expectation(state, op: OperatorSum) -> complex:
    """<psi|O|psi>."""
    return op.expectation_of(state)


def qutrit_pauli_group(n_sites: int) -> list[PauliTerm]:
    """All 9^n qutrit Pauli strings with unit coefficient, identity first,
    in the deterministic lexicographic order of QUTRIT_LABELS per site."""
    if n_sites < 1:
        raise ValueError("n_sites must be >= 1")
    if 9**n_sites > 5_000_000:
        raise ValueError("qutrit Pauli group too large to enumerate")
    out = []
    for idx in range(9**n_sites):
        factors = {}
        ii = idx
        for s in reversed(range(n_sites)):
            lab = QUTRIT_LABELS[ii // 9**s]
            ii %= 9**s
            if lab != "I":
                factors[s] = lab
        out.append(PauliTerm.make(1.0, factors))
    return out
