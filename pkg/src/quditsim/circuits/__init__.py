"""Trotter circuits: term compilation, plans, resources and noise."""

from .factory import (beta_circuit, chromoelectric_circuit, diagonal_circuit,
                      electric_circuit, hop_circuit, kinetic_circuit,
                      mass_circuit, pmmp_circuit, trotter_step_circuit,
                      valence_beta_step, zz_rotation)
from .noise import (NoiseModel, decoherence_renormalize, depolarize,
                    pauli_twirl, postselect)
from .resources import beta_step_resources, combined_step_resources, resource_count
from .trotter import (TrotterPlan, electric_groups, generator_groups,
                      kinetic_hop_pairs, qcd_trotter_groups, trotter_evolve)

__all__ = [n for n in dir() if not n.startswith("_")]
