"""Gradient descent with the pi/4 parameter-shift gradient.

For objectives built from Pauli rotations, the symmetric difference

    grad_i f = f(theta + pi/4 e_i) - f(theta - pi/4 e_i)

is the exact derivative (no finite-difference step error).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SHIFT = np.pi / 4


def parameter_shift_gradient(f, theta: np.ndarray) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    grad = np.zeros_like(theta)
    for i in range(theta.size):
        e = np.zeros_like(theta)
        e[i] = SHIFT
        grad[i] = f(theta + e) - f(theta - e)
    return grad


@dataclass
class DescentTrace:
    thetas: list = field(default_factory=list)
    values: list = field(default_factory=list)
    converged: bool = False
    status: str = "max_steps"

    @property
    def best_theta(self):
        return self.thetas[int(np.argmin(self.values))]

    @property
    def best_value(self):
        return float(np.min(self.values))


def gradient_descent_minimize(f, theta0, eta0: float, max_steps: int,
                              backtracking: bool = True,
                              grad_tol: float = 1e-8,
                              gradient=parameter_shift_gradient) -> DescentTrace:
    """Fixed-step descent; with backtracking the step is halved whenever a
    proposed update would increase f, so the accepted trace is monotone."""
    if eta0 <= 0:
        raise ValueError("eta0 must be positive")
    theta = np.asarray(theta0, dtype=float).copy()
    eta = eta0
    trace = DescentTrace()
    val = f(theta)
    trace.thetas.append(theta.copy())
    trace.values.append(float(val))
    for _ in range(max_steps):
        grad = gradient(f, theta)
        gnorm = np.linalg.norm(grad)
        if gnorm < grad_tol:
            trace.converged = True
            trace.status = "gradient_converged"
            break
        while True:
            cand = theta - eta * grad
            cand_val = f(cand)
            if not backtracking or cand_val <= val:
                break
            eta *= 0.5
            if eta < 1e-15:
                trace.status = "step_underflow"
                return trace
        theta, val = cand, cand_val
        trace.thetas.append(theta.copy())
        trace.values.append(float(val))
    return trace
