"""Neutrino mixing parameters and the PMNS matrix.

Two presets are shipped: the NuFIT v5.3 central values used for the circuit
studies, and the PDG central values used for the magic analysis.  Angles are
stored in radians, mass-squared differences in MeV^2, always assuming the
normal mass ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PmnsParams:
    theta12: float
    theta13: float
    theta23: float
    delta_cp: float
    dm2_21: float  # m2^2 - m1^2, MeV^2
    dm2_31: float  # m3^2 - m1^2, MeV^2
    # half-widths of the quoted 1-sigma intervals, same order as the fields;
    # zero when uncertainties are not tracked
    sigma: tuple = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        for ang in (self.theta12, self.theta13, self.theta23):
            if not 0.0 <= ang <= math.pi / 2:
                raise ValueError("mixing angles must lie in [0, pi/2]")
        if not 0.0 <= self.delta_cp < 2 * math.pi:
            raise ValueError("delta_cp must lie in [0, 2 pi)")
        if self.dm2_21 <= 0 or self.dm2_31 <= 0:
            raise ValueError("mass-squared differences must be positive")

    @classmethod
    def nufit(cls) -> "PmnsParams":
        """NuFIT v5.3 central values (normal ordering)."""
        d = math.pi / 180
        return cls(
            theta12=33.67 * d,
            theta13=8.58 * d,
            theta23=42.3 * d,
            delta_cp=232.0 * d,
            dm2_21=7.41e-17,
            dm2_31=2.505e-15,
            sigma=(0.725 * d, 0.11 * d, 1.0 * d, 32.0 * d, 0.205e-17, 0.025e-15),
        )

    @classmethod
    def pdg(cls) -> "PmnsParams":
        """PDG central values: angles from sin^2(theta), delta = 1.19 pi,
        dm2_31 = dm2_32 + dm2_21."""
        return cls(
            theta12=math.asin(math.sqrt(0.307)),
            theta13=math.asin(math.sqrt(2.19e-2)),
            theta23=math.asin(math.sqrt(0.553)),
            delta_cp=1.19 * math.pi,
            dm2_21=7.53e-17,
            dm2_31=2.455e-15 + 7.53e-17,
            sigma=(
                _asin2_halfwidth(0.307, 0.013),
                _asin2_halfwidth(2.19e-2, 0.07e-2),
                _asin2_halfwidth(0.553, 0.020),
                0.22 * math.pi,
                0.18e-17,
                math.hypot(0.028e-15, 0.18e-17),
            ),
        )

    def sample(self, rng: np.random.Generator) -> "PmnsParams":
        """Draw one parameter set uniformly within the 1-sigma intervals."""
        vals = [self.theta12, self.theta13, self.theta23, self.delta_cp,
                self.dm2_21, self.dm2_31]
        drawn = [v + s * rng.uniform(-1, 1) for v, s in zip(vals, self.sigma)]
        drawn[3] %= 2 * math.pi
        return PmnsParams(*drawn)


def _asin2_halfwidth(s2: float, ds2: float) -> float:
    lo, hi = math.asin(math.sqrt(s2 - ds2)), math.asin(math.sqrt(s2 + ds2))
    return (hi - lo) / 2


def pmns_matrix(params: PmnsParams) -> np.ndarray:
    """PMNS mixing matrix as the standard product of the 23, 13 and 12
    rotation factors (flavor = U . mass)."""
    c12, s12 = math.cos(params.theta12), math.sin(params.theta12)
    c13, s13 = math.cos(params.theta13), math.sin(params.theta13)
    c23, s23 = math.cos(params.theta23), math.sin(params.theta23)
    ed = np.exp(-1j * params.delta_cp)
    r23 = np.array([[1, 0, 0], [0, c23, s23], [0, -s23, c23]], dtype=complex)
    r13 = np.array(
        [[c13, 0, s13 * ed], [0, 1, 0], [-s13 * np.conj(ed), 0, c13]],
        dtype=complex,
    )
    r12 = np.array([[c12, s12, 0], [-s12, c12, 0], [0, 0, 1]], dtype=complex)
    return r23 @ r13 @ r12


def two_flavor_matrix(params: PmnsParams) -> np.ndarray:
    """Mixing matrix of the effective two-flavor system (theta12 only)."""
    c, s = math.cos(params.theta12), math.sin(params.theta12)
    return np.array([[c, s], [-s, c]], dtype=complex)
