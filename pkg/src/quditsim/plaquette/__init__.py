from .hamiltonian import casimir, basis_labels, build_plaquette_hamiltonian, PlaquetteHamiltonian
from .krylov import krylov_ground_state
from .descent import parameter_shift_gradient, gradient_descent_minimize, DescentTrace
from .bayes import (GpModel, gaussian_kernel, gp_posterior, fit_lengths,
                    bayesian_minimize, BayesTrace, SingularCovarianceError)

__all__ = [
    "casimir", "basis_labels", "build_plaquette_hamiltonian", "PlaquetteHamiltonian",
    "krylov_ground_state",
    "parameter_shift_gradient", "gradient_descent_minimize", "DescentTrace",
    "GpModel", "gaussian_kernel", "gp_posterior", "fit_lengths",
    "bayesian_minimize", "BayesTrace", "SingularCovarianceError",
]
