"""Symmetry-sector bases by bit-pattern enumeration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spec import LatticeSpec

if hasattr(np, "bitwise_count"):
    def _popcount(v):
        # bitwise_count yields uint8; widen before any arithmetic
        return np.bitwise_count(v).astype(np.int64)
else:  # pragma: no cover - older numpy
    def _popcount(v):
        v = v.copy()
        out = np.zeros_like(v)
        while v.max(initial=0) > 0:
            out += v & 1
            v >>= 1
        return out


@dataclass
class BasisSector:
    """Ordered embedding of a constrained subspace into the full register."""

    description: str
    indices: np.ndarray  # sorted ascending, int64

    @property
    def dim(self) -> int:
        return len(self.indices)

    def position(self, rows: np.ndarray):
        """Map full-register indices to sector positions (-1 if absent)."""
        pos = np.searchsorted(self.indices, rows)
        pos = np.clip(pos, 0, self.dim - 1)
        ok = self.indices[pos] == rows
        return np.where(ok, pos, -1)


def _mode_masks(spec: LatticeSpec):
    """Per-(parity, flavor, color) qubit masks and odd-mode counts."""
    masks = {}
    for f in range(spec.n_flavors):
        for c in range(spec.n_colors):
            even = odd = 0
            for n in range(spec.n_sites):
                bit = 1 << spec.qubit(n, f, c)
                if n % 2 == 0:
                    even |= bit
                else:
                    odd |= bit
            masks[(f, c)] = (even, odd)
    return masks


def sector_basis(spec: LatticeSpec, color_charges=None, baryon=None,
                 isospin3=None, chunk: int = 1 << 20) -> BasisSector:
    """Enumerate basis states with the given diagonal quantum numbers.

    color_charges: per-color net charge (quarks minus antiquarks of that
    color), a tuple of length n_colors, or None for unconstrained.
    baryon: net particle number / n_colors. isospin3: (N_u - N_d)/2.
    """
    nq = spec.quark_width
    masks = _mode_masks(spec)
    keep_chunks = []
    n_odd_per_mode = spec.L  # odd staggered sites per (f, c) mode
    for start in range(0, 1 << nq, chunk):
        v = np.arange(start, min(start + chunk, 1 << nq), dtype=np.int64)
        ok = np.ones(len(v), dtype=bool)
        charges_c = []
        for c in range(spec.n_colors):
            qc = np.zeros(len(v), dtype=np.int64)
            for f in range(spec.n_flavors):
                even, odd = masks[(f, c)]
                qc += _popcount(v & even) + _popcount(v & odd) - n_odd_per_mode
            charges_c.append(qc)
        if color_charges is not None:
            for c, target in enumerate(color_charges):
                if target is not None:
                    ok &= charges_c[c] == target
        if baryon is not None:
            tot = sum(charges_c)
            ok &= tot == spec.n_colors * baryon
        if isospin3 is not None:
            if spec.n_flavors < 2:
                raise ValueError("isospin requires >= 2 flavors")
            pf = []
            for f in range(2):
                acc = np.zeros(len(v), dtype=np.int64)
                for c in range(spec.n_colors):
                    even, odd = masks[(f, c)]
                    acc += _popcount(v & even) + _popcount(v & odd) - n_odd_per_mode
                pf.append(acc)
            ok &= (pf[0] - pf[1]) == round(2 * isospin3)
        keep_chunks.append(v[ok])
    idx = np.concatenate(keep_chunks)
    desc = f"color={color_charges} B={baryon} I3={isospin3}"
    return BasisSector(desc, idx)


def full_basis(spec: LatticeSpec) -> BasisSector:
    return BasisSector("full", np.arange(1 << spec.quark_width, dtype=np.int64))
