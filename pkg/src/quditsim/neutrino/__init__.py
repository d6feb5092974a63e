"""Three-flavor collective neutrino systems.

Hamiltonian builders for qutrit-native and qubit-pair encodings, exact and
swap-network Trotter evolution, flavor and entanglement observables, state
tomography, and non-stabilizerness (magic) analysis.
"""

from .params import (
    PmnsParams,
    pmns_matrix,
    two_flavor_matrix,
)
from .model import (
    NeutrinoSystemSpec,
    cone_angles,
    evolve_neutrinos,
    gell_mann,
    one_body_hamiltonian,
    supernova_mu,
    two_body_hamiltonian,
    two_body_pair,
)
from .observables import (
    MagicReport,
    entanglement_measures,
    flavor_probabilities,
    magic_power,
    one_body_magic_power_closed_form,
    persistence,
    sre_magic,
)
from .circuits import (
    neutrino_gate_counts,
    one_body_circuit,
    pmns_circuit,
    swap_network_circuit,
    two_neutrino_circuit,
)
from .tomography import (
    closest_physical,
    fidelity,
    purify,
    tomography,
)

__all__ = [
    "MagicReport",
    "NeutrinoSystemSpec",
    "PmnsParams",
    "closest_physical",
    "cone_angles",
    "entanglement_measures",
    "evolve_neutrinos",
    "fidelity",
    "flavor_probabilities",
    "gell_mann",
    "magic_power",
    "neutrino_gate_counts",
    "one_body_circuit",
    "one_body_hamiltonian",
    "one_body_magic_power_closed_form",
    "persistence",
    "pmns_circuit",
    "pmns_matrix",
    "purify",
    "sre_magic",
    "supernova_mu",
    "swap_network_circuit",
    "tomography",
    "two_body_hamiltonian",
    "two_body_pair",
    "two_flavor_matrix",
    "two_neutrino_circuit",
]
