"""Quark + lepton register: lepton, weak-decay and Majorana terms.

The combined register carries 12L quark and 4L lepton qubits. Two mode
orderings are supported:

"standard": per spatial site l the 16 qubits are, LSB first,
    [u_r u_g u_b d_r d_g d_b e nu | ubar_r ubar_g ubar_b dbar_r dbar_g
     dbar_b ebar nubar],
i.e. fermions and antifermions grouped with their staggered site.

"tilde": per spatial site l the quark qubits come first in the plain
staggered order [u d | ubar dbar] (matching the quark-only register) and
the 4 lepton qubits follow as [nu e nubar ebar]. At L=1 this is the
layout used with the diagonal (plane-wave) lepton basis, where the
nu/e slots hold the lower tilde mode and nubar/ebar the upper one.

All operators are built from Jordan-Wigner bilinears in the global mode
ordering, so the Z strings across interleaved species come out right by
construction.
"""

from __future__ import annotations

import math

from ..core.pauli import OperatorSum
from .build import (build_chemical_terms, build_chromoelectric_term,
                    build_kinetic_term, build_mass_term)
from .fermions import bilinear, hop, lowering_string, number_op
from .spec import LatticeSpec

_SPECIES = ("e", "nu")


class ElectroweakLayout:
    """Mode-to-qubit assignment for the combined quark+lepton register."""

    def __init__(self, spec: LatticeSpec):
        if spec.n_colors != 3 or spec.n_flavors != 2:
            raise ValueError("combined register needs N_c=3, N_f=2")
        if spec.lepton_layout not in ("standard", "tilde"):
            raise ValueError(f"unknown lepton layout {spec.lepton_layout!r}")
        self.spec = spec
        self.name = spec.lepton_layout
        self.n_qubits = spec.quark_width + spec.lepton_width

    def quark(self, n: int, f: int, c: int) -> int:
        l, p = divmod(n, 2)
        if self.name == "standard":
            return 16 * l + 8 * p + 3 * f + c
        return 16 * l + 6 * p + 3 * f + c

    def lepton(self, n: int, species: str) -> int:
        """Qubit of lepton mode at staggered site n (tilde layout: n=0 is
        the lower and n=1 the upper plane-wave mode of the site)."""
        s = _SPECIES.index(species)
        l, p = divmod(n, 2)
        if self.name == "standard":
            return 16 * l + 8 * p + 6 + s
        return 16 * l + 12 + 2 * p + (1 - s)

    def lepton_vacuum_index(self) -> int:
        """Free-lepton vacuum in the tilde basis: upper modes filled."""
        idx = 0
        for l in range(self.spec.L):
            for sp in _SPECIES:
                idx |= 1 << self.lepton(2 * l + 1, sp)
        return idx


class _QuarkView:
    """LatticeSpec proxy that routes qubit() through a combined layout so
    the quark-register builders can target the larger register."""

    def __init__(self, layout: ElectroweakLayout):
        self._layout = layout

    def __getattr__(self, name):
        return getattr(self._layout.spec, name)

    def qubit(self, n: int, f: int, c: int) -> int:
        return self._layout.quark(n, f, c)


def lepton_lambda(mass: float) -> float:
    """Single-site plane-wave energy, lambda = sqrt(m^2 + 1/4)."""
    return 0.5 * math.sqrt(1.0 + 4.0 * mass * mass)


def build_lepton_hamiltonian(spec: LatticeSpec, basis: str = "raw") -> OperatorSum:
    """Free staggered leptons on the combined register.

    raw: hopping (1/2) sum (chi^dag_n chi_{n+1} + h.c.) plus the staggered
    mass with constants fixed so particles and antiparticle holes both cost
    +m. tilde (L=1): the same operator rotated to its plane-wave eigenbasis,
    diagonal with +/- lambda occupation energies.
    """
    lay = ElectroweakLayout(spec)
    nq = lay.n_qubits
    m_nu, m_e = spec.lepton_masses
    masses = {"e": m_e, "nu": m_nu}
    acc = OperatorSum.zero(2, nq)
    if basis == "raw":
        ns = spec.n_sites
        for sp in _SPECIES:
            m = masses[sp]
            for n in range(ns - 1):
                acc = acc + hop(nq, lay.lepton(n, sp), lay.lepton(n + 1, sp), 0.5)
            if spec.boundary == "pbc" and ns > 2:
                acc = acc + hop(nq, lay.lepton(ns - 1, sp), lay.lepton(0, sp), 0.5)
            for n in range(ns):
                q = lay.lepton(n, sp)
                if n % 2 == 0:
                    acc = acc + number_op(nq, q, m)
                else:
                    acc = acc + OperatorSum.identity(2, nq, m) - number_op(nq, q, m)
    elif basis == "tilde":
        if spec.L != 1:
            raise ValueError("tilde lepton basis is a single-site construction")
        for sp in _SPECIES:
            m = masses[sp]
            lam = lepton_lambda(m)
            acc = acc + number_op(nq, lay.lepton(0, sp), lam)
            acc = acc - number_op(nq, lay.lepton(1, sp), lam)
            acc = acc + OperatorSum.identity(2, nq, m)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return acc.collect()


def _color_hop(lay: ElectroweakLayout, nq: int, n: int, m: int) -> OperatorSum:
    """sum_c u^dag_{n,c} d_{m,c} (color-contracted flavor-raising bilinear)."""
    acc = OperatorSum.zero(2, nq)
    for c in range(3):
        acc = acc + bilinear(nq, lay.quark(n, 0, c), lay.quark(m, 1, c))
    return acc


def build_beta_term(spec: LatticeSpec, form: str = "full") -> OperatorSum:
    """Four-Fermi quark-lepton interaction (G/sqrt(2)) (u^dag d)(e^dag nu)C.

    form "full" is the complete staggered operator on any L; "tilde_full"
    rewrites the lepton factors in the L=1 plane-wave basis; "valence" keeps
    only the even-site quark bilinear with the pair-creating lepton factor,
    the dominant piece for a decay out of a bare baryon.
    """
    lay = ElectroweakLayout(spec)
    nq = lay.n_qubits
    g = spec.G_weak / math.sqrt(2.0)
    acc = OperatorSum.zero(2, nq)
    if form == "full":
        for l in range(spec.L):
            e0, e1 = lay.lepton(2 * l, "e"), lay.lepton(2 * l + 1, "e")
            v0, v1 = lay.lepton(2 * l, "nu"), lay.lepton(2 * l + 1, "nu")
            q_same = _color_hop(lay, nq, 2 * l, 2 * l) + _color_hop(lay, nq, 2 * l + 1, 2 * l + 1)
            q_cross = _color_hop(lay, nq, 2 * l, 2 * l + 1) + _color_hop(lay, nq, 2 * l + 1, 2 * l)
            l_same = bilinear(nq, e0, v1) - bilinear(nq, e1, v0)
            l_cross = bilinear(nq, e0, v0) - bilinear(nq, e1, v1)
            acc = acc + q_same.matmul(l_same) + q_cross.matmul(l_cross)
    elif form in ("tilde_full", "valence"):
        if spec.L != 1:
            raise ValueError("tilde forms are single-site constructions")
        if spec.lepton_layout != "tilde":
            raise ValueError("tilde forms need the tilde lepton layout")
        e0, e1 = lay.lepton(0, "e"), lay.lepton(1, "e")
        v0, v1 = lay.lepton(0, "nu"), lay.lepton(1, "nu")
        if form == "valence":
            acc = _color_hop(lay, nq, 0, 0).matmul(bilinear(nq, e0, v1))
        else:
            m_nu, m_e = spec.lepton_masses
            sp_n = math.sqrt(1.0 + m_nu / lepton_lambda(m_nu))
            sm_n = math.sqrt(1.0 - m_nu / lepton_lambda(m_nu))
            sp_e = math.sqrt(1.0 + m_e / lepton_lambda(m_e))
            sm_e = math.sqrt(1.0 - m_e / lepton_lambda(m_e))
            q_same = _color_hop(lay, nq, 0, 0) + _color_hop(lay, nq, 1, 1)
            q_cross = _color_hop(lay, nq, 0, 1) + _color_hop(lay, nq, 1, 0)
            pair = bilinear(nq, e0, v1) - bilinear(nq, e1, v0)
            swap = bilinear(nq, e0, v1) + bilinear(nq, e1, v0)
            acc = acc + 0.5 * (sp_e * sp_n + sm_e * sm_n) * q_same.matmul(pair)
            acc = acc - 0.5 * (sp_e * sm_n + sm_e * sp_n) * q_cross.matmul(swap)
    else:
        raise ValueError(f"unknown form {form!r}")
    acc = g * acc
    return (acc + acc.dagger()).collect()


def build_majorana_term(spec: LatticeSpec) -> OperatorSum:
    """(m_M/2) sum over sites of chi_nu chi_nubar + h.c.: a neutrino pair
    annihilator, violating lepton number by two units."""
    lay = ElectroweakLayout(spec)
    nq = lay.n_qubits
    acc = OperatorSum.zero(2, nq)
    for l in range(spec.L):
        a0 = lowering_string(nq, lay.lepton(2 * l, "nu"))
        a1 = lowering_string(nq, lay.lepton(2 * l + 1, "nu"))
        acc = acc + a0.matmul(a1)
    acc = (0.5 * spec.m_majorana) * acc
    return (acc + acc.dagger()).collect()


def lepton_number(spec: LatticeSpec, species: str | None = None) -> OperatorSum:
    """Particles minus antiparticle holes on the (raw-basis) lepton chain.

    In the tilde basis at L=1 the same operator counts upper-mode holes and
    lower-mode particles, so the expression carries over unchanged.
    """
    lay = ElectroweakLayout(spec)
    nq = lay.n_qubits
    acc = OperatorSum.zero(2, nq)
    scope = _SPECIES if species is None else (species,)
    for sp in scope:
        for n in range(spec.n_sites):
            q = lay.lepton(n, sp)
            if n % 2 == 0:
                acc = acc + number_op(nq, q)
            else:
                acc = acc + number_op(nq, q) - OperatorSum.identity(2, nq)
    return acc.collect()


def build_electroweak_hamiltonian(spec: LatticeSpec, beta_form: str = "full",
                                  lepton_basis: str = "raw",
                                  split: bool = False):
    """Strong + free-lepton + weak-decay (+ Majorana, chemical) Hamiltonian
    on the combined register. With split=True returns the named terms."""
    lay = ElectroweakLayout(spec)
    view = _QuarkView(lay)
    nq = lay.n_qubits
    terms = {
        "mass": build_mass_term(view, nq),
        "kinetic": build_kinetic_term(view, nq),
        "electric": build_chromoelectric_term(view, nq),
        "leptons": build_lepton_hamiltonian(spec, lepton_basis),
    }
    if spec.G_weak:
        terms["beta"] = build_beta_term(spec, beta_form)
    if spec.m_majorana:
        terms["majorana"] = build_majorana_term(spec)
    chem = build_chemical_terms(view, nq)
    if chem.terms:
        terms["chemical"] = chem
    if split:
        return terms
    acc = OperatorSum.zero(2, nq)
    for t in terms.values():
        acc = acc + t
    return acc.collect()
