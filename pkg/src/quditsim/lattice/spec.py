"""Lattice model description."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class LatticeSpec:
    """1+1D staggered-fermion gauge-matter model.

    Quark register: 2L staggered sites (even = quark, odd = antiquark),
    n_colors * n_flavors modes per site, qubit index
    i(n, f, c) = n_colors*n_flavors*n + n_colors*f + c.
    Site 0 is the least significant qubit. |1> = occupied mode; the trivial
    vacuum has every odd staggered site fully occupied.
    """

    L: int = 1
    n_colors: int = 3
    n_flavors: int = 1
    masses: tuple = (1.0,)
    g: float = 1.0
    mu_B: float = 0.0
    mu_I: float = 0.0
    mu_II: float = 0.0
    penalty_h: float = 0.0
    boundary: str = "obc"  # obc | pbc
    lepton_masses: tuple = (0.0, 0.0)  # (m_nu, m_e)
    G_weak: float = 0.0
    m_majorana: float = 0.0
    lambda_d: int | None = None  # chromoelectric site-distance cutoff (PBC)
    lepton_layout: str = "standard"  # standard | tilde

    def __post_init__(self):
        if self.L < 1:
            raise ValueError("L must be >= 1")
        if self.n_colors < 2:
            raise ValueError("n_colors must be >= 2")
        if len(self.masses) != self.n_flavors:
            raise ValueError("need one mass per flavor")
        if self.boundary not in ("obc", "pbc"):
            raise ValueError("boundary must be obc or pbc")

    @property
    def n_sites(self) -> int:
        """Staggered sites."""
        return 2 * self.L

    @property
    def modes_per_site(self) -> int:
        return self.n_colors * self.n_flavors

    @property
    def quark_width(self) -> int:
        return self.n_sites * self.modes_per_site

    @property
    def lepton_width(self) -> int:
        return 4 * self.L

    def qubit(self, n: int, f: int, c: int) -> int:
        if not (0 <= n < self.n_sites and 0 <= f < self.n_flavors and 0 <= c < self.n_colors):
            raise ValueError("mode index out of range")
        return self.modes_per_site * n + self.n_colors * f + c

    def trivial_vacuum_index(self) -> int:
        """Basis index of the strong-coupling vacuum (odd sites filled)."""
        idx = 0
        for n in range(1, self.n_sites, 2):
            for f in range(self.n_flavors):
                for c in range(self.n_colors):
                    idx |= 1 << self.qubit(n, f, c)
        return idx
