from .spec import LatticeSpec
from .fermions import bilinear, hop, number_op, raising_string, lowering_string
from .charges import (gell_mann, su_n_generators, site_charge, charge_product,
                      truncated_charge_product, total_charge)
from .build import (build_mass_term, build_kinetic_term,
                    build_chromoelectric_term, build_chemical_terms,
                    build_ks_hamiltonian, build_pbc_hamiltonian,
                    build_penalty, baryon_number, isospin_z)
from .sectors import BasisSector, sector_basis, full_basis
from .singlets import SingletBasisElement, color_singlet_basis
from .spectrum import (project_operator, project_to_states, exact_spectrum,
                       singlet_spectrum, deuteron_binding)
from .observables import (embed, linear_entropy, quark_occupation,
                          energy_decomposition, state_observables)
from .electroweak import (ElectroweakLayout, build_lepton_hamiltonian,
                          build_beta_term, build_majorana_term,
                          build_electroweak_hamiltonian, lepton_number,
                          lepton_lambda)

__all__ = [n for n in dir() if not n.startswith("_")]
