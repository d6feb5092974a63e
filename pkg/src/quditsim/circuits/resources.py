"""Closed-form gate counts for one first-order Trotter step.

Counts are reported per Hamiltonian family (mass, chemical potentials,
kinetic, chromoelectric) in terms of R_Z, Hadamard and CNOT gates, for a
single flavored staggered lattice of L physical sites with N_c colors and
N_f flavors.  The kinetic count switches to the ancilla-free construction
when N_c N_f < 4, and the chromoelectric CNOT count has a dedicated SU(2)
form.  The weak-interaction step on the combined quark-lepton register has
its own per-step and per-evolution totals.
"""

from __future__ import annotations


def _kinetic(nc, nf, L):
    n_hops = nc * nf * (2 * L - 1)
    rz = 2 * n_hops
    had = 2 * n_hops
    if nc * nf < 4:
        cnot = 2 * (2 * L - 1) * nc * (nc + 1)
    else:
        cnot = 2 * nc * nf * (8 * L - 3) - 4
    return {"rz": rz, "hadamard": had, "cnot": cnot}


def _electric(nc, nf, L):
    k = 2 * L - 1
    rz = (k * nc * nf * (3 - 4 * nc + nf * k * (5 * nc - 4))) // 2
    had = (k * (nc - 1) * nc * nf * (nf * k - 1)) // 2
    if nc == 2:
        cnot = k * nf * (9 * k * nf - 7)
    else:
        cnot = (k * (nc - 1) * nc * nf * (k * (2 * nc + 17) * nf - 2 * nc - 11)) // 6
    return {"rz": rz, "hadamard": had, "cnot": cnot}


def resource_count(nc, nf, L):
    """Per-family gate counts for one Trotter step of the quark Hamiltonian.

    Returns a dict keyed by family name; each value is a dict with keys
    ``rz``, ``hadamard``, ``cnot``.  A ``total`` entry sums the families.

    Parameters
    ----------
    nc, nf, L : int
        Number of colors (>= 2), flavors and physical lattice sites.
    """
    if nc < 2:
        raise ValueError("need at least two colors")
    n_modes = 2 * nc * nf * L
    diag = {"rz": n_modes, "hadamard": 0, "cnot": 0}
    out = {
        "mass": dict(diag),
        "mu_B": dict(diag),
        "mu_I": dict(diag),
        "kinetic": _kinetic(nc, nf, L),
        "electric": _electric(nc, nf, L),
    }
    total = {g: sum(fam[g] for fam in out.values()) for g in ("rz", "hadamard", "cnot")}
    out["total"] = total
    return out


def beta_step_resources(L):
    """Gate counts for one weak-interaction (beta) Trotter step."""
    return {"rz": 192 * L, "hadamard": 48 * L, "cnot": 436 * L}


def combined_step_resources(L):
    """Totals for a full step of the combined quark-lepton Hamiltonian."""
    return {
        "rz": 264 * L * L - 54 * L + 77,
        "hadamard": 48 * L * L + 20 * L + 2,
        "cnot": 368 * L * L + 120 * L + 74,
        "multi_qubit_terms": 96 * L * L - 68 * L + 22,
    }
