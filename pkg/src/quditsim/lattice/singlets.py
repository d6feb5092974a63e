"""Color-singlet basis built by tiling sites with local singlet blocks.

The blocks are the empty site, the on-site baryon (all three colors
occupied), a two-site quark/antiquark contraction, and three-site
(anti)baryon contractions.  Each block is obtained as the null space of
the summed charge Casimir restricted to a fixed occupation pattern, so
the amplitudes are correct for any internal sign convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .charges import site_charge
from .spec import LatticeSpec


@dataclass
class SingletBasisElement:
    """Normalized color-singlet state as an amplitude map over basis indices."""

    description: str
    amplitudes: dict  # full-register basis index -> complex amplitude

    def vector(self, n_qubits: int) -> np.ndarray:
        v = np.zeros(1 << n_qubits, dtype=complex)
        for idx, a in self.amplitudes.items():
            v[idx] = a
        return v


def _local_singlet(n_blocks: int, occupations) -> list:
    """Singlet combinations over n_blocks sites of 3 color qubits each.

    Returns a list of (coeff, tuple of per-site 3-bit patterns) for states
    whose per-site occupation matches ``occupations`` and which are
    annihilated by all eight summed charges.
    """
    spec = LatticeSpec(L=1, n_flavors=1) if n_blocks <= 2 else LatticeSpec(L=2, n_flavors=1)
    nq = 3 * n_blocks
    dim = 1 << nq
    casimir = None
    for a in range(8):
        q = None
        for n in range(n_blocks):
            t = site_charge(spec, n, a, 0, nq)
            q = t if q is None else q + t
        m = q.to_matrix()
        casimir = m @ m if casimir is None else casimir + m @ m
    # restrict to the requested occupation pattern before the null space
    keep = []
    for v in range(dim):
        pats = [(v >> (3 * n)) & 7 for n in range(n_blocks)]
        if all(bin(p).count("1") == o for p, o in zip(pats, occupations)):
            keep.append(v)
    keep = np.array(keep)
    sub = casimir[np.ix_(keep, keep)]
    w, vec = np.linalg.eigh(sub)
    null = vec[:, w < 1e-9]
    out = []
    for k in range(null.shape[1]):
        col = null[:, k]
        j = np.argmax(np.abs(col))
        col = col * (np.abs(col[j]) / col[j])  # fix the overall phase
        amps = [(col[i], tuple((keep[i] >> (3 * n)) & 7 for n in range(n_blocks)))
                for i in range(len(keep)) if abs(col[i]) > 1e-12]
        out.append(amps)
    return out


_BLOCK_CACHE = {}


def _blocks():
    if not _BLOCK_CACHE:
        _BLOCK_CACHE["meson"] = _local_singlet(2, (2, 1))[0]
        _BLOCK_CACHE["baryon"] = _local_singlet(3, (1, 1, 1))[0]
        _BLOCK_CACHE["antibaryon"] = _local_singlet(3, (2, 2, 2))[0]
    return _BLOCK_CACHE


def _partitions(sites):
    """Set partitions of ``sites`` into parts of size 1, 2 (ordered) or 3."""
    if not sites:
        yield []
        return
    first, rest = sites[0], sites[1:]
    for tail in _partitions(rest):
        yield [("single", (first,))] + tail
    for other in rest:
        remaining = [s for s in rest if s != other]
        for tail in _partitions(remaining):
            yield [("pair", (first, other))] + tail
            yield [("pair", (other, first))] + tail
    for pair in combinations(rest, 2):
        remaining = [s for s in rest if s not in pair]
        for tail in _partitions(remaining):
            yield [("triple", (first,) + pair)] + tail


def color_singlet_basis(spec: LatticeSpec, baryon=None) -> list:
    """Orthonormal spanning set of the color-singlet subspace.

    Tiles the 2L staggered sites with singlet blocks, expands each tiling
    into register amplitudes, optionally filters by baryon number, and
    orthonormalizes the resulting span.
    """
    if spec.n_colors != 3:
        raise ValueError("singlet tiling implemented for N_c=3")
    if spec.n_flavors != 1:
        raise NotImplementedError("singlet tiling implemented for N_f=1")
    blocks = _blocks()
    sites = list(range(spec.n_sites))
    raw = []
    for part in _partitions(sites):
        # choices per part: singles in {empty, full}; pairs are the meson
        # contraction; triples host a baryon or an antibaryon
        choices = [[]]
        for kind, where in part:
            options = []
            if kind == "single":
                options = [(1.0, {where[0]: 0}), (1.0, {where[0]: 7})]
            elif kind == "pair":
                options = [(c, dict(zip(where, pats))) for c, pats in blocks["meson"]]
                options = [options]  # a pair is one superposed block
            else:
                options = [
                    [(c, dict(zip(where, pats))) for c, pats in blocks["baryon"]],
                    [(c, dict(zip(where, pats))) for c, pats in blocks["antibaryon"]],
                ]
            if kind == "single":
                options = [[opt] for opt in options]
            new = []
            for partial in choices:
                for opt in options:
                    new.append(partial + [opt])
            choices = new
        for assignment in choices:
            total = [(1.0, {})]
            for block_amps in assignment:
                merged = []
                for c0, pat0 in total:
                    for c1, pat1 in block_amps:
                        pat = dict(pat0)
                        pat.update(pat1)
                        merged.append((c0 * c1, pat))
                total = merged
            amap = {}
            for c, pat in total:
                idx = 0
                for n, p in pat.items():
                    idx |= p << (3 * n)
                amap[idx] = amap.get(idx, 0.0) + c
            if baryon is not None:
                occ = bin(next(iter(amap))).count("1")
                if occ - 3 * spec.L != 3 * baryon:
                    continue
            raw.append(amap)
    # orthonormalize the span
    nq = spec.quark_width
    support = sorted({i for amap in raw for i in amap})
    pos = {i: k for k, i in enumerate(support)}
    mat = np.zeros((len(support), len(raw)), dtype=complex)
    for j, amap in enumerate(raw):
        for i, a in amap.items():
            mat[pos[i], j] = a
    u, s, _ = np.linalg.svd(mat, full_matrices=False)
    keep = u[:, s > 1e-9 * max(len(raw), 1)]
    out = []
    for j in range(keep.shape[1]):
        col = keep[:, j]
        k = np.argmax(np.abs(col))
        col = col * (np.abs(col[k]) / col[k])
        amap = {support[i]: col[i] for i in range(len(support)) if abs(col[i]) > 1e-12}
        out.append(SingletBasisElement(f"singlet[{j}] L={spec.L}", amap))
    return out
