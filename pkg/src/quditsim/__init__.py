"""quditsim: gate-level qudit simulation of 1+1D SU(3) lattice matter and
collective neutrino flavor dynamics."""

__version__ = "0.1.0"
